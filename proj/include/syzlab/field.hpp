#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace syz {

enum class FieldKind { rational, prime };

/// Coefficient field of a computation: the rationals, or Z/p for a fixed prime.
struct Field {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint32_t p);

  /// The prime used by the fast (heuristic) mode.
  static constexpr std::uint32_t kDefaultPrime = 32003;

  bool is_rational() const { return kind == FieldKind::rational; }
  /// "Q" or "F<p>".
  std::string label() const;
  /// Inverse of label(); also accepts "Fp" for the default prime.
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime(std::uint64_t n);

/// Residue class modulo p, always stored in [0, p).
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// An element of either field kind. Rationals are kept canonical (lowest
/// terms, positive denominator); arithmetic between different fields throws
/// MalformedInput.
class FieldElement {
 public:
  FieldElement() : value_(mpq_class(0)) {}
  FieldElement(long n) : value_(mpq_class(n)) {}  // NOLINT: literal convenience
  explicit FieldElement(mpq_class q);

  static FieldElement zero(const Field& f);
  static FieldElement one(const Field& f);
  /// Image of the rational q in f. Throws if the denominator vanishes mod p.
  static FieldElement from_rational(const mpq_class& q, const Field& f);
  static FieldElement residue(std::int64_t v, std::uint32_t p);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;  // throws unless rational
  std::uint32_t residue_value() const;  // throws unless prime

  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// "num/den", "num", or the residue representative.
  std::string to_string() const;
  /// Parses "a", "-a", "a/b" into field f.
  static FieldElement parse(std::string_view text, const Field& f);

 private:
  std::variant<mpq_class, Residue> value_;
};

}  // namespace syz
