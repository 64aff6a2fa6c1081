#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/field.hpp"
#include "syzlab/groebner.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/poly.hpp"

namespace syz {

enum class FixtureKind { veronese, scroll, hyperelliptic };

/// A smooth variety X with a line bundle L, realized on a model ring R whose
/// graded pieces R_(l) (modulo `relations`) are H^0(X, L^l), and a subsystem
/// V of H^0(X, L) given by coordinates in the monomial basis of H^0(L).
///
///   veronese:      R = k[x0..xn], R_(l) = degree d*l
///   scroll:        R = k[s,t,l1..lk], deg s = deg t = (0,1),
///                  deg l_i = (1, A - a_i + 1), R_(l) = bidegree (l, l(A+1))
///   hyperelliptic: R = k[y,u,w] / (y^2 - F(u,w)), weights 3,1,1,
///                  F(u,w) = w^6 f(u/w), R_(l) = weighted degree m*l
struct EmbeddedVariety {
  FixtureKind kind = FixtureKind::veronese;
  int n = 0;                     // veronese: P^n
  int d = 0;                     // veronese: O(d)
  std::vector<int> twists;       // scroll: a_1 >= ... >= a_k >= 1
  std::vector<mpq_class> sextic; // hyperelliptic: f = sum sextic[i] x^i
  int m = 0;                     // hyperelliptic: L = m K_inf
  Field field;

  RingPtr ring;
  std::vector<Polynomial> relations;
  std::shared_ptr<const GroebnerBasis> relations_gb;
  std::vector<Monomial> h0_basis;                   // basis of H^0(L)
  std::vector<std::vector<FieldElement>> v_coords;  // rows: V in that basis
  int t = 0;
  std::uint64_t seed = 0;
  int retries = 0;

  int dim() const;
  int h0L() const { return static_cast<int>(h0_basis.size()); }
  int dimV() const { return static_cast<int>(v_coords.size()); }
  int ambient() const { return dimV() - 1; }
  bool complete() const { return t == 0; }
  /// Degree of X in P(V) (L^dim X).
  int degree() const;
  /// Multidegree of R_(l).
  std::vector<int> piece_degree(int l) const;
  /// Standard monomials of R_(l): a basis of H^0(L^l), l >= 0.
  std::vector<Monomial> piece_basis(int l) const;
  /// V as polynomials of R_(1).
  std::vector<Polynomial> v_polys() const;
  std::string descriptor() const;
};

EmbeddedVariety veronese(int n, int d, Field field = Field::rationals());
EmbeddedVariety rational_scroll(std::vector<int> twists, Field field = Field::rationals());
/// f given by coefficients c_0..c_6 of c_0 + c_1 x + ... + c_6 x^6.
EmbeddedVariety hyperelliptic_g2(std::vector<mpq_class> sextic, int m, Field field = Field::rationals());
/// x^6 - 1.
std::vector<mpq_class> default_sextic();

/// dim H^i(X, L^k) from closed forms.
long oracle_h(const EmbeddedVariety& v, int i, int k);

/// Least m with H^i(X, L^{m-i}) = 0 for all i >= 1.
int regularity_of_OX(const EmbeddedVariety& v);
/// H^1(X, L^j) = 0 for every j >= 2 (from the closed forms).
bool certify_h1_vanishing(const EmbeddedVariety& v);

/// Pieces E_0..E_bound with multiplication by the basis of V.
GradedModuleData build_E(const EmbeddedVariety& v, int degree_bound);

/// Kernel of k[z_0..z_r] -> R, z_i -> V_i (the ideal of X in P(V)).
Ideal image_ideal(const EmbeddedVariety& v, const GroebnerCache* cache = nullptr);
/// Hilbert polynomial of the image equals that of L (see groebner).
bool is_isomorphic_embedding(const EmbeddedVariety& v, const GroebnerCache* cache = nullptr);

/// Replaces V by the kernel of t seeded random functionals with integer
/// coefficients in [-101, 101]; retries fresh draws until the result is an
/// isomorphic embedding.
EmbeddedVariety project(const EmbeddedVariety& v, int t, std::uint64_t seed, int max_retries = 8,
                        const GroebnerCache* cache = nullptr);

}  // namespace syz
