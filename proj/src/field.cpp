#include "syzlab/field.hpp"

#include <charconv>

#include "syzlab/errors.hpp"

namespace syz {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw MalformedInput("field modulus " + std::to_string(p) + " is not prime");
  return {FieldKind::prime, p};
}

std::string Field::label() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Fp") return prime(kDefaultPrime);
  if (text.size() > 1 && text.front() == 'F') {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) return prime(p);
  }
  throw MalformedInput("unknown field '" + std::string(text) + "' (expected Q, Fp or F<prime>)");
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw MalformedInput("division by zero modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

[[noreturn]] void mismatch() { throw MalformedInput("arithmetic between elements of different fields"); }

}  // namespace

FieldElement::FieldElement(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

FieldElement FieldElement::zero(const Field& f) {
  return f.is_rational() ? FieldElement(0) : residue(0, f.p);
}

FieldElement FieldElement::one(const Field& f) {
  return f.is_rational() ? FieldElement(1) : residue(1, f.p);
}

FieldElement FieldElement::from_rational(const mpq_class& q, const Field& f) {
  if (f.is_rational()) return FieldElement(q);
  std::uint32_t den = reduce_mpz(q.get_den(), f.p);
  if (den == 0)
    throw MalformedInput("denominator of " + q.get_str() + " vanishes modulo " + std::to_string(f.p));
  std::uint64_t num = reduce_mpz(q.get_num(), f.p);
  FieldElement e;
  e.value_ = Residue{static_cast<std::uint32_t>(num * inverse_mod(den, f.p) % f.p), f.p};
  return e;
}

FieldElement FieldElement::residue(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  FieldElement e;
  e.value_ = Residue{static_cast<std::uint32_t>(r), p};
  return e;
}

Field FieldElement::field() const {
  if (auto* r = std::get_if<Residue>(&value_)) return {FieldKind::prime, r->modulus};
  return Field::rationals();
}

bool FieldElement::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw MalformedInput("element is not rational");
}

std::uint32_t FieldElement::residue_value() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw MalformedInput("element is not a residue");
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw MalformedInput("inverse of zero");
  if (auto* r = std::get_if<Residue>(&value_)) return residue(inverse_mod(r->value, r->modulus), r->modulus);
  return FieldElement(mpq_class(1) / std::get<mpq_class>(value_));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    auto* oq = std::get_if<mpq_class>(&o.value_);
    if (!oq) mismatch();
    *q += *oq;
    return *this;
  }
  auto& r = std::get<Residue>(value_);
  auto* orr = std::get_if<Residue>(&o.value_);
  if (!orr || orr->modulus != r.modulus) mismatch();
  r.value = static_cast<std::uint32_t>((std::uint64_t(r.value) + orr->value) % r.modulus);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    auto* oq = std::get_if<mpq_class>(&o.value_);
    if (!oq) mismatch();
    *q *= *oq;
    return *this;
  }
  auto& r = std::get<Residue>(value_);
  auto* orr = std::get_if<Residue>(&o.value_);
  if (!orr || orr->modulus != r.modulus) mismatch();
  r.value = static_cast<std::uint32_t>(std::uint64_t(r.value) * orr->value % r.modulus);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_)) return residue(r->value == 0 ? 0 : r->modulus - r->value, r->modulus);
  return FieldElement(mpq_class(-std::get<mpq_class>(value_)));
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }

std::string FieldElement::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

FieldElement FieldElement::parse(std::string_view text, const Field& f) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0)
    throw MalformedInput("cannot parse coefficient '" + s + "'");
  if (q.get_den() == 0) throw MalformedInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_rational(q, f);
}

}  // namespace syz
