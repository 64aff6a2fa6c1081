#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "syzlab/field.hpp"

namespace syz {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector. Entries beyond the ring's variable count are zero.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial from_exponents(const std::vector<int>& exps);

  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);
  int total_degree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// this / o; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  /// True when the supports are disjoint (gcd = 1).
  bool coprime(const Monomial& o) const;

  std::size_t hash() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::int16_t, kMaxVars> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Polynomial ring with a (multi)grading and a block graded-reverse-lex order.
/// Each block compares by the weighted degree of its variables (weight = total
/// degree of the variable's degree vector), then reverse lexicographically.
/// A single block is ordinary (weighted) grevlex; several blocks give an
/// elimination order for the earlier blocks.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<std::vector<int>> degrees,
       std::vector<std::size_t> block_starts = {0});

  /// Standard graded ring with all variables of degree 1.
  static std::shared_ptr<const Ring> standard(std::vector<std::string> names);
  /// Variables prefix0 .. prefix{n-1}.
  static std::shared_ptr<const Ring> standard(std::string_view prefix, std::size_t n);

  std::size_t nvars() const { return names_.size(); }
  std::size_t grading_rank() const { return degrees_.front().size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degree(std::size_t var) const { return degrees_[var]; }
  int weight(std::size_t var) const { return weights_[var]; }
  const std::vector<std::size_t>& block_starts() const { return block_starts_; }
  std::size_t index_of(std::string_view name) const;

  std::vector<int> multidegree(const Monomial& m) const;
  int weighted_degree(const Monomial& m) const;

  /// Negative, zero or positive as a < b, a == b, a > b in the monomial order.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string monomial_string(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> degrees_;
  std::vector<int> weights_;
  std::vector<std::size_t> block_starts_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

/// All monomials of the given multidegree, largest first in the ring order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, const std::vector<int>& degree);
/// Convenience for singly graded rings.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree);

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/// Exact multivariate polynomial; terms sorted strictly decreasing in the
/// ring order with nonzero coefficients.
class Polynomial {
 public:
  Polynomial(RingPtr ring, Field field);

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial variable(RingPtr ring, std::size_t i, Field field = Field::rationals());
  static Polynomial monomial(RingPtr ring, const Monomial& m, const FieldElement& c);
  /// Builds from arbitrary terms (combined and sorted).
  static Polynomial from_terms(RingPtr ring, Field field, std::vector<Term> terms);
  /// Parses text such as `3*x0^2*x1 - 1/2*x2^3`.
  static Polynomial parse(std::string_view text, RingPtr ring, Field field = Field::rationals());

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const;
  const FieldElement& leading_coefficient() const;

  bool is_homogeneous() const;
  /// Multidegree of a homogeneous nonzero polynomial.
  std::vector<int> multidegree() const;
  int weighted_degree() const;

  Polynomial monic() const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_monomial(const Monomial& m, const FieldElement& c) const;
  /// Same terms read in another ring with identical variables (order may differ).
  Polynomial in_ring(RingPtr other) const;
  Polynomial reduce_to(const Field& target) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  FieldElement coefficient(const Monomial& m) const;
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;
  RingPtr ring_;
  Field field_;
  std::vector<Term> terms_;
};

/// S -> T sending the i-th variable of S to images[i].
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }
  /// Common multidegree of the images in the target grading.
  const std::vector<int>& image_degree() const { return image_degree_; }

  Polynomial apply(const Polynomial& p) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
  std::vector<int> image_degree_;
};

inline Polynomial apply_map(const RingMap& f, const Polynomial& p) { return f.apply(p); }

}  // namespace syz
