#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzlab/betti.hpp"
#include "syzlab/geometry.hpp"
#include "syzlab/koszul.hpp"

namespace syz {

/// Lazily built graded data of one fixture: E (sections), S(X) (image of
/// Sym V) and the restriction ranks, extended on demand.
class Analyzer {
 public:
  explicit Analyzer(EmbeddedVariety v, KoszulOptions opts = {});

  const EmbeddedVariety& variety() const { return v_; }
  const KoszulOptions& options() const { return opts_; }
  const GradedModuleData& E(int bound);
  const GradedModuleData& S(int bound);
  /// dim E_k - rank(Sym^k V -> E_k).
  long defect(int k);

 private:
  void ensure(int bound);
  EmbeddedVariety v_;
  KoszulOptions opts_;
  int bound_ = 0;
  GradedModuleData e_, s_;
};

struct NormalityRecord {
  int k = 0;
  long sym_dim = 0;   // dim Sym^k V
  long rank = 0;      // rank of Sym^k V -> E_k
  long e_dim = 0;     // dim E_k
  long defect = 0;    // e_dim - rank = dim H^1(I_X(k))
};

struct NormalityReport {
  std::vector<NormalityRecord> records;  // k = 1..kmax
  /// Least k0 with defect 0 for every recorded k >= k0.
  int first_normal() const;
};

NormalityReport normality_report(Analyzer& a, int kmax);
/// (k-normal, defect). k >= 1.
std::pair<bool, long> k_normality(Analyzer& a, int k);
std::pair<bool, long> k_normality(const EmbeddedVariety& v, int k);

/// dim H^i(P^r, I_X(k)), i >= 1, from the structure sequence.
long ideal_sheaf_cohomology(Analyzer& a, int i, int k);
long ideal_sheaf_cohomology(const EmbeddedVariety& v, int i, int k);

struct RegularityReport {
  std::map<std::pair<int, int>, long> table;  // (i, k) -> dim H^i(I_X(k))
  int mumford = 0;
  std::optional<int> betti;      // from the Koszul path on S(X)
  std::optional<bool> agreement;
  int search_bound = 0;
  std::string note;
};

/// Least m <= search_bound with H^i(I_X(m-i)) = 0 for 1 <= i <= r; throws
/// NotFound otherwise. with_betti also reads regularity off the Betti table
/// of S(X) (rows through m + 1) and compares.
RegularityReport mumford_regularity(Analyzer& a, int search_bound, bool with_betti = false);
RegularityReport mumford_regularity(const EmbeddedVariety& v, int search_bound, bool with_betti = false);

struct GenerationReport {
  int max_degree = 0;
  std::map<int, long> degrees;  // degree -> number of minimal generators
};

/// Minimal generator degrees of I_X, read from k_{1,j}(S(X)) for
/// j + 1 <= reg(X) (no generator can sit above the regularity).
GenerationReport generation_degrees(Analyzer& a);
int generation_degree(const EmbeddedVariety& v);

struct Claim {
  std::string name;
  std::optional<int> k;
  std::string relation = "==";  // computed <relation> predicted
  long predicted = 0;
  long computed = 0;
  std::optional<long> defect;
  /// False when the claim is reported only (no prediction applies).
  bool asserted = true;
  std::string note;

  bool holds() const;
  bool violated() const { return asserted && !holds(); }
};

struct AuditReport {
  std::string fixture;
  std::vector<Claim> claims;
  std::vector<std::string> notes;

  int violations() const;
  std::string to_json() const;
};

/// Projects v_base (complete, N_p verified here) by t seeded functionals and
/// tests N^S_{p-t}; for t <= p-1, or when N^S_1 is found, also normality for
/// k = t+1 .. max(t+3, reg), regularity <= max{m+1, t+2} and generators in
/// degree <= t+2.
AuditReport audit_theorem_effect(const EmbeddedVariety& v_base, int p, int t, std::uint64_t seed = 1,
                                 int window = 4);
/// reg <= d - (r - n) + 1 for rational scrolls (curves included), and the
/// curve bound reg <= d - r + 2 - l for every admissible l.
AuditReport audit_bounds(Analyzer& a);
AuditReport audit_bounds(const EmbeddedVariety& v);

/// R = k + V + E_2 + ...: k_{i,j}(R) = 0 for 0 <= i <= p, 2 <= j <= window.
NpsResult ntilde_check(Analyzer& a, int p, int window = 4);
bool ntilde_check(const EmbeddedVariety& v, int p);

}  // namespace syz
