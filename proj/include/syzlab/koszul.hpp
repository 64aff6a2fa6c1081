#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzlab/betti.hpp"
#include "syzlab/field.hpp"
#include "syzlab/matrix.hpp"

namespace syz {

/// Pieces E_0..E_bound of a graded module over Sym V, with multiplication
/// mult[l][a] : E_l -> E_{l+1} by the a-th basis vector of V (l < bound).
struct GradedModuleData {
  Field field;
  std::size_t dimV = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> mult;
  /// Set by fixtures that can certify H^1(X, L^j) = 0 for all j >= 2.
  bool h1_vanishing_certified = false;

  int bound() const { return static_cast<int>(dims.size()) - 1; }

  /// Shape checks; with check_commute also v*w = w*v on every piece.
  void validate(bool check_commute = true) const;

  /// {"dimV":..,"pieces":[{"l","dim"}],"mult":[{"v","l","matrix":[[r,c,"q"]]}],"field":".."}
  std::string to_json() const;
  static GradedModuleData from_json(const std::string& text);
};

struct KoszulOptions {
  /// Limit on C(dimV, i+1) * dim E_{j-1}, the column count of the left map.
  std::uint64_t cap = 50'000'000;
  /// Over Q: compute ranks mod a prime first; a cell that vanishes mod p
  /// vanishes over Q (ranks can only drop mod p and d^2 = 0), everything else
  /// is recomputed over Q.
  bool certify_mod_p = true;
  std::uint32_t certify_prime = 32003;
  bool check_complex = true;
};

/// Shares differential ranks between neighbouring cells.
class KoszulCalculator {
 public:
  explicit KoszulCalculator(const GradedModuleData& e, KoszulOptions opts = {});
  ~KoszulCalculator();

  /// Homology at wedge^i V (x) E_j of
  ///   wedge^{i+1}V (x) E_{j-1} -> wedge^i V (x) E_j -> wedge^{i-1}V (x) E_{j+1}.
  long betti(int i, int j);
  BettiTable table(int imax, int jmax);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

long koszul_betti(const GradedModuleData& e, int i, int j, const KoszulOptions& opts = {});
BettiTable koszul_table(const GradedModuleData& e, int imax, int jmax, const KoszulOptions& opts = {});

struct NpsResult {
  bool holds = false;
  std::optional<std::pair<int, int>> first_failure;
  int window = 0;  // rows j = 2..window were checked
};

/// k_{i,j} = 0 for 0 <= i <= p and 2 <= j <= window. Needs the H^1
/// certificate on e.
NpsResult nps_check(const GradedModuleData& e, int p, int window = 4, const KoszulOptions& opts = {});

/// E modulo c generic linear forms of V, over the quotient V/<l_1..l_c>.
/// Every form is checked to be a nonzerodivisor on the pieces up to the bound
/// (so the Betti numbers of the result equal those of e); a draw that fails
/// the check is replaced, and RetriesExhausted is thrown after `tries`.
GradedModuleData artinian_reduction(const GradedModuleData& e, std::size_t c, std::uint64_t seed,
                                    int tries = 4);

/// Submodule generated by the pieces gens[l] (vectors of E_l). Pieces of the
/// result have reduced echelon bases; `generated_by_degree_zero` and
/// `birkenhake` are the two common cases.
GradedModuleData generated_submodule(const GradedModuleData& e,
                                     const std::vector<std::vector<SparseVector>>& gens);
/// S(X) = image of Sym V in E.
GradedModuleData generated_by_degree_zero(const GradedModuleData& e);
/// R = k + V + E_2 + E_3 + ...
GradedModuleData birkenhake(const GradedModuleData& e);

/// Rank of Sym^k V -> E_k, k = 0..bound.
std::vector<std::size_t> restriction_ranks(const GradedModuleData& e);

}  // namespace syz
