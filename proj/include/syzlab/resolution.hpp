#pragma once

#include <climits>
#include <vector>

#include "syzlab/betti.hpp"
#include "syzlab/field.hpp"
#include "syzlab/groebner.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/poly.hpp"

namespace syz {

/// coker(F_1 -> F_0) over a standard graded polynomial ring, F_0 = sum S(-g).
/// relations[c][r] is the entry in row r (generator r) of column c; it is
/// homogeneous of degree relation_degrees[c] - generator_degrees[r] or zero.
struct GradedPresentation {
  RingPtr ring;
  Field field;
  std::vector<int> generator_degrees;
  std::vector<std::vector<Polynomial>> relations;
  std::vector<int> relation_degrees;
  /// Generators and relations are all known through this internal degree.
  /// Then k_{0,j} is exact for j <= complete_through and k_{i,j}, i >= 1,
  /// for j <= complete_through - 1 (kernels of a minimal resolution have no
  /// constant coefficients, so step i in degree d only sees generators of
  /// step i-1 below d).
  int complete_through = INT_MAX;

  static GradedPresentation quotient(const Ideal& ideal);
  void validate() const;
};

BettiTable minimal_betti(const GradedPresentation& p, int imax, int jmax);

/// Presentation of E as an S-module, S = Sym V with variables z_0..z_{dimV-1}:
/// generators are complements of V E_{l-1} in E_l, relations are read from
/// (F_0)_d -> E_d for d <= degree_bound. complete_through = degree_bound.
GradedPresentation present_E(const GradedModuleData& e, int degree_bound);

}  // namespace syz
