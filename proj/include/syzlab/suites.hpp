#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "syzlab/checks.hpp"
#include "syzlab/groebner.hpp"

namespace syz {

// Named fixture collections shared by the CLI and the acceptance run.

/// Expected (first normal k, regularity) for veronese(2,3) projected from t
/// general points, t = 0..4, as tabulated in the literature.
std::pair<int, int> table2_expected(int t);

struct Table2Row {
  int t = 0;
  int ambient = 0;
  int first_normal = 0;
  int regularity = 0;
  std::pair<int, int> expected;
  bool match = false;
  std::vector<long> defects;  // k = 1.. max(t+3, reg)
  bool heuristic = false;     // prime field
};

Table2Row table2_row(int t, std::uint64_t seed, const Field& field, const GroebnerCache* cache = nullptr);

/// green-g2 | scrolls | example1 | effect
std::vector<AuditReport> run_suite(const std::string& name, const Field& field, std::uint64_t seed);

}  // namespace syz
