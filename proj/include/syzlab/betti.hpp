#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "syzlab/field.hpp"

namespace syz {

/// k_{i,j} for 0 <= i <= imax, 0 <= j <= jmax. Cells outside the computed
/// window are absent; nothing outside it is ever assumed to vanish.
struct BettiTable {
  std::string path = "resolution";  // "resolution" or "koszul"
  Field field;
  int imax = 0;
  int jmax = 0;
  std::map<std::pair<int, int>, long> entries;
  /// Number of variables of the polynomial ring (0 if unknown); the table
  /// has no cells beyond i = nvars.
  int nvars = 0;

  bool heuristic() const { return !field.is_rational(); }
  bool has(int i, int j) const { return entries.count({i, j}) > 0; }
  /// Throws RangeTooSmall for a cell outside the window.
  long at(int i, int j) const;
  void set(int i, int j, long k) { entries[{i, j}] = k; }

  /// Same window and same values cell for cell (path and field tags ignored).
  bool same_cells(const BettiTable& o) const;

  /// {"path","field","imax","jmax","entries":[{"i","j","k"}]} in that key order;
  /// prime-field tables add "heuristic": true.
  std::string to_json() const;
  /// Conventional display: rows j, columns i.
  std::string to_pretty() const;
  std::string to_tsv() const;
};

/// Least m with k_{i,j} = 0 for all j >= m in the window. Throws RangeTooSmall
/// when a nonzero entry sits on the last computed row, or when the window
/// stops short of i = nvars.
int regularity_from_betti(const BettiTable& b);

struct NpVerdict {
  int p = -1;                // largest p with the N_p shape (-1: fails N_0)
  bool all_computed = false; // the shape holds through i = imax
};

/// Largest p with k_{i,j} = 0 for 0 <= i <= p and j >= 2 inside the window;
/// for linearly normal input also k_{0,1} = 0 is required (otherwise the N_0
/// test fails). Needs jmax >= 3.
NpVerdict np_from_betti(const BettiTable& b, bool linearly_normal);

}  // namespace syz
