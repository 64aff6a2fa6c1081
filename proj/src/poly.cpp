#include "syzlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>

#include "syzlab/errors.hpp"

namespace syz {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > kMaxVars) throw MalformedInput("too many variables for a monomial");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (e < 0 || e > std::numeric_limits<std::int16_t>::max()) throw ResourceLimit("exponent out of range");
  exps_[i] = static_cast<std::int16_t>(e);
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int e = int(exps_[i]) + o.exps_[i];
    if (e > std::numeric_limits<std::int16_t>::max()) throw ResourceLimit("exponent overflow");
    m.exps_[i] = static_cast<std::int16_t>(e);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (o.exps_[i] > exps_[i]) throw MalformedInput("monomial quotient is not a monomial");
    m.exps_[i] = static_cast<std::int16_t>(exps_[i] - o.exps_[i]);
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] && o.exps_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (auto e : exps_) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// -------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names, std::vector<std::vector<int>> degrees,
           std::vector<std::size_t> block_starts)
    : names_(std::move(names)), degrees_(std::move(degrees)), block_starts_(std::move(block_starts)) {
  if (names_.empty()) throw MalformedInput("ring needs at least one variable");
  if (names_.size() > kMaxVars) throw ResourceLimit("more than " + std::to_string(kMaxVars) + " variables");
  if (degrees_.size() != names_.size()) throw MalformedInput("one degree vector per variable required");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (n.empty() || !seen.insert(n).second) throw MalformedInput("variable names must be distinct and nonempty");
  for (const auto& d : degrees_) {
    if (d.empty() || d.size() != degrees_.front().size()) throw MalformedInput("degree vectors must share a length");
    int total = 0;
    for (int x : d) {
      if (x < 0) throw MalformedInput("degree vector components must be nonnegative");
      total += x;
    }
    if (total <= 0) throw MalformedInput("every variable needs positive total degree");
    weights_.push_back(total);
  }
  if (block_starts_.empty() || block_starts_.front() != 0) throw MalformedInput("blocks must start at variable 0");
  for (std::size_t i = 1; i < block_starts_.size(); ++i)
    if (block_starts_[i] <= block_starts_[i - 1] || block_starts_[i] >= names_.size())
      throw MalformedInput("block starts must increase within the variable range");
}

RingPtr Ring::standard(std::vector<std::string> names) {
  std::vector<std::vector<int>> deg(names.size(), std::vector<int>{1});
  return std::make_shared<const Ring>(std::move(names), std::move(deg));
}

RingPtr Ring::standard(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return standard(std::move(names));
}

std::size_t Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw MalformedInput("unknown variable '" + std::string(name) + "'");
}

std::vector<int> Ring::multidegree(const Monomial& m) const {
  std::vector<int> d(grading_rank(), 0);
  for (std::size_t v = 0; v < nvars(); ++v)
    if (m[v])
      for (std::size_t k = 0; k < d.size(); ++k) d[k] += m[v] * degrees_[v][k];
  return d;
}

int Ring::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t v = 0; v < nvars(); ++v) d += m[v] * weights_[v];
  return d;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  for (std::size_t blk = 0; blk < block_starts_.size(); ++blk) {
    std::size_t s = block_starts_[blk];
    std::size_t e = blk + 1 < block_starts_.size() ? block_starts_[blk + 1] : nvars();
    int wa = 0, wb = 0;
    for (std::size_t v = s; v < e; ++v) {
      wa += a[v] * weights_[v];
      wb += b[v] * weights_[v];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
    for (std::size_t v = e; v-- > s;)
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string out;
  for (std::size_t v = 0; v < nvars(); ++v) {
    if (!m[v]) continue;
    if (!out.empty()) out += '*';
    out += names_[v];
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

bool operator==(const Ring& a, const Ring& b) {
  return a.names_ == b.names_ && a.degrees_ == b.degrees_ && a.block_starts_ == b.block_starts_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

namespace {

void enumerate(const Ring& ring, std::size_t var, std::vector<int>& rem, Monomial& cur, std::vector<Monomial>& out) {
  const auto& d = ring.degree(var);
  if (var + 1 == ring.nvars()) {
    // the last variable must absorb the remaining degree exactly
    int e = -1;
    for (std::size_t k = 0; k < rem.size(); ++k) {
      if (d[k] == 0) {
        if (rem[k] != 0) return;
        continue;
      }
      if (rem[k] % d[k] != 0) return;
      int ek = rem[k] / d[k];
      if (e >= 0 && e != ek) return;
      e = ek;
    }
    cur.set(var, e);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = 0;; ++e) {
    bool fits = true;
    for (std::size_t k = 0; k < rem.size(); ++k) fits = fits && rem[k] - e * d[k] >= 0;
    if (!fits) break;
    for (std::size_t k = 0; k < rem.size(); ++k) rem[k] -= e * d[k];
    cur.set(var, e);
    enumerate(ring, var + 1, rem, cur, out);
    for (std::size_t k = 0; k < rem.size(); ++k) rem[k] += e * d[k];
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, const std::vector<int>& degree) {
  if (degree.size() != ring.grading_rank()) throw MalformedInput("degree vector has the wrong length");
  for (int x : degree)
    if (x < 0) return {};
  std::vector<Monomial> out;
  std::vector<int> rem = degree;
  Monomial cur;
  enumerate(ring, 0, rem, cur, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree) {
  return monomials_of_degree(ring, std::vector<int>{degree});
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring, Field field) : ring_(std::move(ring)), field_(field) {
  if (!ring_) throw MalformedInput("polynomial without a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  return monomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i, Field field) {
  if (i >= ring->nvars()) throw MalformedInput("variable index out of range");
  Monomial m;
  m.set(i, 1);
  return monomial(std::move(ring), m, FieldElement::one(field));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const FieldElement& c) {
  Polynomial p(std::move(ring), c.field());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, Field field, std::vector<Term> terms) {
  Polynomial p(std::move(ring), field);
  const Ring& r = *p.ring_;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!(t.coeff.field() == field)) throw MalformedInput("coefficient outside the polynomial field");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw MalformedInput("zero polynomial has no leading term");
  return terms_.front().mono;
}

const FieldElement& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw MalformedInput("zero polynomial has no leading term");
  return terms_.front().coeff;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = ring_->multidegree(terms_.front().mono);
  for (const auto& t : terms_)
    if (ring_->multidegree(t.mono) != d) return false;
  return true;
}

std::vector<int> Polynomial::multidegree() const {
  if (terms_.empty()) throw MalformedInput("zero polynomial has no degree");
  if (!is_homogeneous()) throw MalformedInput("polynomial is not homogeneous");
  return ring_->multidegree(terms_.front().mono);
}

int Polynomial::weighted_degree() const {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.mono));
  return d;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial p(ring_, field_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const FieldElement& c) const {
  Polynomial p(ring_, field_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  if (other->names() != ring_->names()) throw MalformedInput("rings have different variables");
  return from_terms(std::move(other), field_, terms_);
}

Polynomial Polynomial::reduce_to(const Field& target) const {
  if (target == field_) return *this;
  std::vector<Term> t;
  for (const auto& term : terms_) t.push_back({term.mono, FieldElement::from_rational(term.coeff.rational(), target)});
  return from_terms(ring_, target, std::move(t));
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw MalformedInput("polynomials live in different rings");
  if (!(field_ == o.field_)) throw MalformedInput("polynomials have different coefficient fields");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  const Ring& r = *ring_;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : r.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_, field_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Polynomial::from_terms(a.ring_, a.field_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || !(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return FieldElement::zero(field_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    bool unit_mono = t.mono == Monomial();
    std::string body = unit_mono ? c : (c == "1" ? ring_->monomial_string(t.mono) : c + "*" + ring_->monomial_string(t.mono));
    if (first)
      out = negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, const Field& field)
      : text_(text), ring_(ring), field_(field) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    for (;;) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip();
      if (pos_ == text_.size()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return Polynomial::from_terms(ring_, field_, std::move(terms));
  }

 private:
  Term term() {
    Term t{Monomial(), FieldElement::one(field_)};
    for (;;) {
      skip();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string num = digits();
        skip();
        if (pos_ < text_.size() && peek() == '/') {
          get();
          skip();
          num += "/" + digits();
        }
        t.coeff *= FieldElement::parse(num, field_);
      } else {
        std::string name = identifier();
        std::size_t v = ring_->index_of(name);
        int e = 1;
        skip();
        if (pos_ < text_.size() && peek() == '^') {
          get();
          skip();
          e = std::stoi(digits());
        }
        t.mono.set(v, t.mono[v] + e);
      }
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        get();
        continue;
      }
      return t;
    }
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a variable or number");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedInput("polynomial syntax error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                         std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
  Field field_;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, RingPtr ring, Field field) {
  if (text.find_first_not_of(" \t") != std::string_view::npos && text.substr(text.find_first_not_of(" \t")) == "0")
    return Polynomial(std::move(ring), field);
  return PolyParser(text, ring, field).parse();
}

// ----------------------------------------------------------------- RingMap

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->nvars()) throw MalformedInput("ring map needs one image per source variable");
  for (const auto& img : images_) {
    if (!same_ring(img.ring(), target_)) throw MalformedInput("ring map image outside the target ring");
    if (img.is_zero() || !img.is_homogeneous()) throw MalformedInput("ring map images must be nonzero and homogeneous");
    auto d = img.multidegree();
    if (image_degree_.empty())
      image_degree_ = d;
    else if (d != image_degree_)
      throw MalformedInput("ring map images must share one degree");
    if (!(img.field() == images_.front().field())) throw MalformedInput("ring map images over different fields");
  }
}

Polynomial RingMap::apply(const Polynomial& p) const {
  if (!same_ring(p.ring(), source_)) throw MalformedInput("polynomial is not in the source ring of the map");
  Field field = images_.front().field();
  if (!(p.field() == field)) throw MalformedInput("polynomial and map have different coefficient fields");
  std::vector<std::vector<Polynomial>> powers(source_->nvars());
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(Polynomial::constant(target_, FieldElement::one(field)));
    while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * images_[v]);
    return pv[e];
  };
  Polynomial out(target_, field);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target_, t.coeff);
    for (std::size_t v = 0; v < source_->nvars(); ++v)
      if (t.mono[v]) term = term * power(v, t.mono[v]);
    out += term;
  }
  return out;
}

}  // namespace syz
