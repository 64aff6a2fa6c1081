#include "syzlab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"

namespace syz {

Ideal::Ideal(RingPtr ring, Field field, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), field_(field) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw MalformedInput("ideal generator outside the ring");
    if (!(g.field() == field_)) throw MalformedInput("ideal generator over another field");
    if (!g.is_homogeneous()) throw MalformedInput("ideal generators must be homogeneous: " + g.to_string());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::string Ideal::to_text() const {
  std::string out;
  for (const auto& g : gens_) out += g.to_string() + "\n";
  return out;
}

std::string order_tag(const Ring& ring) {
  if (ring.block_starts().size() == 1) return "grevlex";
  std::string s = "block(";
  for (std::size_t i = 0; i < ring.block_starts().size(); ++i) s += (i ? "," : "") + std::to_string(ring.block_starts()[i]);
  return s + ")";
}

namespace {

struct QArith {
  using T = mpq_class;
  static T from(const FieldElement& e) { return e.rational(); }
  static FieldElement to(const T& x) { return FieldElement(x); }
  static bool is_zero(const T& x) { return sgn(x) == 0; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T inv(const T& a) { return 1 / a; }
  static T one() { return 1; }
};

struct PArith {
  using T = std::uint32_t;
  std::uint32_t p;
  T from(const FieldElement& e) const { return e.residue_value(); }
  FieldElement to(T x) const { return FieldElement::residue(x, p); }
  static bool is_zero(T x) { return x == 0; }
  T mul(T a, T b) const { return static_cast<T>(std::uint64_t(a) * b % p); }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T inv(T a) const { return inverse_mod(a, p); }
  static T one() { return 1; }
};

template <class A>
class Engine {
 public:
  using T = typename A::T;
  using Poly = std::vector<std::pair<Monomial, T>>;

  Engine(const Ring& ring, A arith, GroebnerOptions opts) : R_(ring), a_(std::move(arith)), opts_(opts) {}

  Poly native(const Polynomial& p) const {
    Poly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.emplace_back(t.mono, a_.from(t.coeff));
    return out;
  }

  std::vector<Term> terms(const Poly& p) const {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p) out.push_back({m, a_.to(c)});
    return out;
  }

  void make_monic(Poly& p) const {
    if (p.empty() || p.front().second == A::one()) return;
    T inv = a_.inv(p.front().second);
    for (auto& e : p) e.second = a_.mul(e.second, inv);
  }

  // p[from..] - c * m * g
  Poly sub_mul(const Poly& p, std::size_t from, const T& c, const Monomial& m, const Poly& g) const {
    Poly out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from, j = 0;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(p[i++]);
        continue;
      }
      Monomial gm = g[j].first * m;
      int cmp = i == p.size() ? -1 : R_.compare(p[i].first, gm);
      if (cmp > 0) {
        out.push_back(p[i++]);
      } else if (cmp < 0) {
        out.emplace_back(gm, a_.sub(T(0), a_.mul(c, g[j].second)));
        ++j;
      } else {
        T v = a_.sub(p[i].second, a_.mul(c, g[j].second));
        if (!A::is_zero(v)) out.emplace_back(gm, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  const Poly* find_reducer(const Monomial& m, const std::vector<Poly>& basis, std::size_t skip = SIZE_MAX) const {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (k != skip && !basis[k].empty() && basis[k].front().first.divides(m)) return &basis[k];
    return nullptr;
  }

  // Full reduction against monic reducers.
  Poly reduce(Poly p, const std::vector<Poly>& basis, std::size_t skip = SIZE_MAX) const {
    Poly rem;
    std::size_t start = 0;
    while (start < p.size()) {
      const Monomial& lm = p[start].first;
      const Poly* g = find_reducer(lm, basis, skip);
      if (!g) {
        rem.push_back(std::move(p[start]));
        ++start;
        continue;
      }
      T c = p[start].second;
      p = sub_mul(p, start, c, lm / g->front().first, *g);
      start = 0;
    }
    return rem;
  }

  std::vector<Poly> run(const std::vector<Polynomial>& gens) {
    struct Item {
      int deg;
      Monomial lcm;
      std::int64_t i, j;  // j < 0: input generator i
    };
    std::vector<Item> queue;
    std::vector<Poly> inputs;
    for (const auto& g : gens) {
      inputs.push_back(native(g));
      queue.push_back({R_.weighted_degree(g.leading_monomial()), g.leading_monomial(),
                       static_cast<std::int64_t>(inputs.size() - 1), -1});
    }
    std::uint64_t processed = 0;
    while (!queue.empty()) {
      // smallest degree; generators before pairs; then by lcm in the order
      std::size_t best = 0;
      for (std::size_t k = 1; k < queue.size(); ++k) {
        const Item& a = queue[k];
        const Item& b = queue[best];
        if (a.deg != b.deg) {
          if (a.deg < b.deg) best = k;
          continue;
        }
        bool ag = a.j < 0, bg = b.j < 0;
        if (ag != bg) {
          if (ag) best = k;
          continue;
        }
        int c = R_.compare(a.lcm, b.lcm);
        if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
      }
      Item it = queue[best];
      queue[best] = queue.back();
      queue.pop_back();
      if (it.deg > opts_.degree_cap)
        throw ResourceLimit("Groebner basis degree cap " + std::to_string(opts_.degree_cap) + " exceeded");
      Poly s;
      if (it.j < 0) {
        s = inputs[it.i];
      } else {
        if (++processed > opts_.pair_cap)
          throw ResourceLimit("Groebner basis S-pair cap " + std::to_string(opts_.pair_cap) + " exceeded");
        const Poly& f = polys_[it.i];
        const Poly& g = polys_[it.j];
        Monomial mf = it.lcm / f.front().first, mg = it.lcm / g.front().first;
        Poly ff;
        ff.reserve(f.size());
        for (const auto& [m, c] : f) ff.emplace_back(m * mf, c);
        s = sub_mul(ff, 0, A::one(), mg, g);
      }
      Poly h = reduce(std::move(s), active_polys());
      if (h.empty()) continue;
      make_monic(h);
      update(std::move(h), queue);
    }
    std::vector<Poly> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    // tails
    for (std::size_t k = 0; k < out.size(); ++k) {
      Poly tail(out[k].begin() + 1, out[k].end());
      Poly r = reduce(std::move(tail), out, k);
      Poly full{out[k].front()};
      for (auto& e : r) full.push_back(std::move(e));
      out[k] = std::move(full);
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly& x, const Poly& y) { return R_.compare(x.front().first, y.front().first) < 0; });
    return out;
  }

 private:
  const std::vector<Poly>& active_polys() {
    if (!active_cache_valid_) {
      active_cache_.clear();
      for (std::size_t k = 0; k < polys_.size(); ++k)
        if (active_[k]) active_cache_.push_back(polys_[k]);
      active_cache_valid_ = true;
    }
    return active_cache_;
  }

  template <class Item>
  void update(Poly h, std::vector<Item>& queue) {
    const std::int64_t hi = static_cast<std::int64_t>(polys_.size());
    const Monomial H = h.front().first;
    std::vector<std::int64_t> C;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) C.push_back(static_cast<std::int64_t>(k));
    std::vector<Monomial> Cl;
    for (auto g : C) Cl.push_back(H.lcm(polys_[g].front().first));
    std::vector<std::size_t> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      bool keep = H.coprime(polys_[C[k]].front().first);
      if (!keep) {
        keep = true;
        for (std::size_t k2 = k + 1; k2 < C.size() && keep; ++k2) keep = !Cl[k2].divides(Cl[k]);
        for (std::size_t d : D) {
          if (!keep) break;
          keep = !Cl[d].divides(Cl[k]);
        }
      }
      if (keep) D.push_back(k);
    }
    std::vector<Item> kept;
    kept.reserve(queue.size() + D.size());
    for (auto& it : queue) {
      if (it.j >= 0 && H.divides(it.lcm)) {
        const Monomial& g1 = polys_[it.i].front().first;
        const Monomial& g2 = polys_[it.j].front().first;
        if (!(g1.lcm(H) == it.lcm) && !(H.lcm(g2) == it.lcm)) continue;
      }
      kept.push_back(std::move(it));
    }
    for (std::size_t d : D)
      if (!H.coprime(polys_[C[d]].front().first)) kept.push_back({R_.weighted_degree(Cl[d]), Cl[d], C[d], hi});
    queue = std::move(kept);
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k] && H.divides(polys_[k].front().first)) active_[k] = 0;
    polys_.push_back(std::move(h));
    active_.push_back(1);
    active_cache_valid_ = false;
  }

  const Ring& R_;
  A a_;
  GroebnerOptions opts_;
  std::vector<Poly> polys_;
  std::vector<char> active_;
  std::vector<Poly> active_cache_;
  bool active_cache_valid_ = false;
};

template <class Fn>
decltype(auto) with_arith(const Field& f, Fn&& fn) {
  if (f.is_rational()) return fn(QArith{});
  return fn(PArith{f.p});
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& opts) {
  GroebnerBasis out{ideal.ring(), ideal.field(), order_tag(*ideal.ring()), {}, true};
  with_arith(ideal.field(), [&](auto arith) {
    Engine<decltype(arith)> eng(*ideal.ring(), arith, opts);
    for (const auto& p : eng.run(ideal.generators()))
      out.basis.push_back(Polynomial::from_terms(ideal.ring(), ideal.field(), eng.terms(p)));
  });
  return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  if (!same_ring(p.ring(), g.ring)) throw MalformedInput("normal form across rings");
  if (!(p.field() == g.field)) throw MalformedInput("normal form across fields");
  Polynomial out(g.ring, g.field);
  with_arith(g.field, [&](auto arith) {
    Engine<decltype(arith)> eng(*g.ring, arith, {});
    std::vector<typename Engine<decltype(arith)>::Poly> basis;
    for (const auto& b : g.basis) basis.push_back(eng.native(b.monic()));
    out = Polynomial::from_terms(g.ring, g.field, eng.terms(eng.reduce(eng.native(p), basis)));
  });
  return out;
}

namespace {

Monomial shift(const Monomial& m, std::size_t n, std::ptrdiff_t by) {
  Monomial out;
  for (std::size_t v = 0; v < n; ++v)
    if (m[v]) out.set(static_cast<std::size_t>(static_cast<std::ptrdiff_t>(v) + by), m[v]);
  return out;
}

Polynomial transport(const Polynomial& p, const RingPtr& to, std::ptrdiff_t by) {
  std::vector<Term> t;
  std::size_t n = p.ring()->nvars();
  for (const auto& term : p.terms()) t.push_back({shift(term.mono, n, by), term.coeff});
  return Polynomial::from_terms(to, p.field(), std::move(t));
}

}  // namespace

Ideal kernel_of_map(const RingMap& f, const Ideal& source_relations, const GroebnerOptions& opts) {
  const Ring& S = *f.source();
  const Ring& T = *f.target();
  if (!same_ring(source_relations.ring(), f.target())) throw MalformedInput("relations must live in the map's target ring");
  Field field = f.images().front().field();
  if (!(source_relations.field() == field)) throw MalformedInput("relations and map over different fields");
  int image_weight = 0;
  for (int x : f.image_degree()) image_weight += x;

  std::vector<std::string> names;
  std::vector<std::vector<int>> degrees;
  for (std::size_t v = 0; v < T.nvars(); ++v) {
    names.push_back("t" + std::to_string(v));
    degrees.push_back({T.weight(v)});
  }
  for (std::size_t v = 0; v < S.nvars(); ++v) {
    // grevlex on the kept block must match S's own order
    if (S.grading_rank() != 1 || S.weight(v) != 1 || S.block_starts().size() != 1)
      throw Unsupported("kernel_of_map needs a standard graded source ring");
    names.push_back("s" + std::to_string(v));
    degrees.push_back({image_weight});
  }
  if (T.nvars() + S.nvars() > kMaxVars) throw ResourceLimit("graph ring has too many variables");
  auto G = std::make_shared<const Ring>(names, degrees, std::vector<std::size_t>{0, T.nvars()});

  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < S.nvars(); ++v) {
    Monomial m;
    m.set(T.nvars() + v, 1);
    gens.push_back(Polynomial::monomial(G, m, FieldElement::one(field)) - transport(f.images()[v], G, 0));
  }
  for (const auto& r : source_relations.generators()) gens.push_back(transport(r, G, 0));
  GroebnerBasis gb = buchberger(Ideal(G, field, gens), opts);

  std::vector<Polynomial> kernel;
  for (const auto& g : gb.basis) {
    const Monomial& lm = g.leading_monomial();
    bool eliminated = true;
    for (std::size_t v = 0; v < T.nvars() && eliminated; ++v) eliminated = lm[v] == 0;
    if (!eliminated) continue;
    std::vector<Term> t;
    for (const auto& term : g.terms()) t.push_back({shift(term.mono, G->nvars(), -static_cast<std::ptrdiff_t>(T.nvars())), term.coeff});
    // shift() only moved variables at index >= T.nvars(), which is all of them here
    kernel.push_back(Polynomial::from_terms(f.source(), field, std::move(t)));
  }
  return Ideal(f.source(), field, std::move(kernel));
}

namespace {

std::vector<Polynomial> sorted_by_degree(const Ideal& ideal) {
  if (ideal.ring()->grading_rank() != 1) throw Unsupported("singly graded ring required");
  auto gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.multidegree()[0] < b.multidegree()[0]; });
  return gens;
}

SparseVector coordinates(const Polynomial& p, const std::unordered_map<Monomial, std::uint32_t, MonomialHash>& index) {
  SparseVector v;
  for (const auto& t : p.terms()) v.emplace_back(index.at(t.mono), t.coeff);
  canonicalize(v);
  return v;
}

}  // namespace

Ideal minimal_generators(const Ideal& ideal) {
  auto gens = sorted_by_degree(ideal);
  const Ring& R = *ideal.ring();
  std::vector<Polynomial> kept;
  std::size_t k = 0;
  while (k < gens.size()) {
    int d = gens[k].multidegree()[0];
    auto mons = monomials_of_degree(R, d);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    for (std::uint32_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
    Subspace W(mons.size(), ideal.field());
    for (const auto& g : kept) {
      int e = d - g.multidegree()[0];
      for (const auto& m : monomials_of_degree(R, e))
        W.add(coordinates(g.times_monomial(m, FieldElement::one(ideal.field())), index));
    }
    for (; k < gens.size() && gens[k].multidegree()[0] == d; ++k)
      if (W.add(coordinates(gens[k], index))) kept.push_back(gens[k]);
  }
  return Ideal(ideal.ring(), ideal.field(), std::move(kept));
}

std::vector<std::size_t> generator_degrees(const Ideal& ideal) {
  std::vector<std::size_t> out;
  Ideal minimal = minimal_generators(ideal);
  for (const auto& g : minimal.generators()) {
    std::size_t d = static_cast<std::size_t>(g.multidegree()[0]);
    if (out.size() <= d) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}

std::size_t hilbert_function(const GroebnerBasis& g, int d) {
  if (d < 0) return 0;
  std::vector<Monomial> lts;
  for (const auto& b : g.basis) lts.push_back(b.leading_monomial());
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(*g.ring, d)) {
    bool standard = true;
    for (const auto& lt : lts)
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    count += standard;
  }
  return count;
}

std::size_t hilbert_function(const Ideal& ideal, int d, const GroebnerOptions& opts) {
  return hilbert_function(buchberger(ideal, opts), d);
}

namespace {

using Series = std::vector<long>;

void add_into(Series& a, const Series& b, std::size_t shift_by, long sign) {
  if (a.size() < b.size() + shift_by) a.resize(b.size() + shift_by, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift_by] += sign * b[i];
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

// Numerator of the Hilbert series of S / (gens), by pivoting on a variable.
Series numerator(std::vector<Monomial> gens, std::size_t n) {
  minimalize(gens);
  if (gens.empty()) return {1};
  const Monomial* mixed = nullptr;
  for (const auto& g : gens) {
    std::size_t support = 0;
    for (std::size_t v = 0; v < n; ++v) support += g[v] > 0;
    if (support > 1) {
      mixed = &g;
      break;
    }
  }
  if (!mixed) {
    // pure powers of distinct variables: a complete intersection
    Series out{1};
    for (const auto& g : gens) {
      Series factor(g.total_degree() + 1, 0);
      factor[0] = 1;
      factor.back() = -1;
      Series prod(out.size() + factor.size() - 1, 0);
      for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < factor.size(); ++j) prod[i + j] += out[i] * factor[j];
      out = std::move(prod);
    }
    return out;
  }
  std::size_t x = 0;
  while ((*mixed)[x] == 0) ++x;
  Monomial xv;
  xv.set(x, 1);
  std::vector<Monomial> plus{xv}, colon;
  for (const auto& g : gens) {
    if (g[x] == 0) plus.push_back(g);
    colon.push_back(g[x] ? g / xv : g);
  }
  Series out = numerator(std::move(plus), n);
  add_into(out, numerator(std::move(colon), n), 1, 1);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// value at x of the polynomial C(x + n - 1, n - 1)
mpz_class binomial_poly(long x, std::size_t n) {
  mpz_class num = 1;
  for (std::size_t i = 1; i < n; ++i) num *= x + static_cast<long>(i);
  mpz_class den = 1;
  for (std::size_t i = 1; i < n; ++i) den *= static_cast<long>(i);
  return num / den;
}

void require_standard(const Ring& R) {
  for (std::size_t v = 0; v < R.nvars(); ++v)
    if (R.grading_rank() != 1 || R.weight(v) != 1) throw Unsupported("standard graded ring required");
}

}  // namespace

std::vector<long> hilbert_numerator(const GroebnerBasis& g) {
  require_standard(*g.ring);
  std::vector<Monomial> lts;
  for (const auto& b : g.basis) lts.push_back(b.leading_monomial());
  return numerator(std::move(lts), g.ring->nvars());
}

namespace {

mpz_class hilbert_poly_value(const Series& q, std::size_t n, long d) {
  mpz_class v = 0;
  for (std::size_t k = 0; k < q.size(); ++k) v += q[k] * binomial_poly(d - static_cast<long>(k), n);
  return v;
}

mpz_class hilbert_value(const Series& q, std::size_t n, long d) {
  mpz_class v = 0;
  for (std::size_t k = 0; k < q.size(); ++k)
    if (d >= static_cast<long>(k)) v += q[k] * binomial_poly(d - static_cast<long>(k), n);
  return v;
}

int polynomial_start(const Series& q, std::size_t n) {
  long d0 = std::max<long>(0, static_cast<long>(q.size()) - 1 - static_cast<long>(n) + 1);
  while (d0 > 0 && hilbert_value(q, n, d0 - 1) == hilbert_poly_value(q, n, d0 - 1)) --d0;
  return static_cast<int>(d0);
}

}  // namespace

int hilbert_polynomial_start(const GroebnerBasis& g) {
  return polynomial_start(hilbert_numerator(g), g.ring->nvars());
}

std::vector<Polynomial> ideal_in_degree(const RingMap& f, const Ideal& source_relations, int d) {
  if (d < 0) return {};
  const Ring& S = *f.source();
  if (S.grading_rank() != 1) throw Unsupported("singly graded source ring required");
  Field field = f.images().front().field();
  std::optional<GroebnerBasis> J;
  if (!source_relations.is_zero()) J = buchberger(source_relations);
  auto mons = monomials_of_degree(S, d);
  std::vector<int> tdeg = f.image_degree();
  for (auto& x : tdeg) x *= d;
  auto tmons = monomials_of_degree(*f.target(), tdeg);
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  for (std::uint32_t i = 0; i < tmons.size(); ++i) index.emplace(tmons[i], i);
  std::vector<SparseVector> cols;
  for (const auto& m : mons) {
    Polynomial img = f.apply(Polynomial::monomial(f.source(), m, FieldElement::one(field)));
    if (J) img = normal_form(img, *J);
    cols.push_back(coordinates(img, index));
  }
  Matrix K = kernel_basis(Matrix::from_columns(tmons.size(), cols, field));
  std::vector<Polynomial> out;
  for (const auto& col : K.columns()) {
    std::vector<Term> t;
    for (const auto& [r, x] : col) t.push_back({mons[r], x});
    out.push_back(Polynomial::from_terms(f.source(), field, std::move(t)));
  }
  return out;
}

bool is_isomorphic_embedding(const GroebnerBasis& image, const std::function<long(int)>& source_h0, int dim,
                             int source_stable_from) {
  auto q = hilbert_numerator(image);
  std::size_t n = image.ring->nvars();
  int start = std::max({polynomial_start(q, n), source_stable_from, 0});
  for (int d = start; d <= start + dim; ++d)
    if (hilbert_value(q, n, d) != source_h0(d)) return false;
  return true;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

GroebnerCache GroebnerCache::from_environment(const std::string& fallback) {
  const char* env = std::getenv("SYZLAB_CACHE_DIR");
  return GroebnerCache(env && *env ? std::string(env) : fallback);
}

namespace {

std::string ring_text(const Ring& R) {
  std::string s;
  for (std::size_t v = 0; v < R.nvars(); ++v) {
    s += R.names()[v] + ":";
    for (int x : R.degree(v)) s += std::to_string(x) + ",";
    s += ";";
  }
  return s + order_tag(R);
}

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 15];
  return s;
}

}  // namespace

std::string GroebnerCache::key(const Ideal& ideal, std::string_view tag) const {
  std::string text = std::string(tag) + "|" + ring_text(*ideal.ring()) + "|" + ideal.field().label() + "|" + ideal.to_text();
  return hex64(fnv1a64(text));
}

std::optional<std::vector<Polynomial>> GroebnerCache::load(const std::string& key, const RingPtr& ring,
                                                          const Field& field) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir_) / (key + ".gb"));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != "syzlab-gb 1") return std::nullopt;
  std::vector<Polynomial> out;
  bool complete = false;
  while (std::getline(in, line)) {
    if (line == "end") {
      complete = true;
      break;
    }
    out.push_back(Polynomial::parse(line, ring, field));
  }
  if (!complete) return std::nullopt;
  return out;
}

void GroebnerCache::store(const std::string& key, const std::vector<Polynomial>& polys) const {
  if (!enabled()) return;
  namespace fs = std::filesystem;
  fs::create_directories(dir_);
  fs::path final_path = fs::path(dir_) / (key + ".gb");
  fs::path tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << "syzlab-gb 1\n";
    for (const auto& p : polys) out << p.to_string() << "\n";
    out << "end\n";
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, final_path);
}

Ideal kernel_of_map_cached(const RingMap& f, const Ideal& source_relations, const GroebnerCache& cache,
                           const GroebnerOptions& opts) {
  if (!cache.enabled()) return kernel_of_map(f, source_relations, opts);
  Field field = f.images().front().field();
  std::string tag = "kernel|" + ring_text(*f.source()) + "|" + ring_text(*f.target()) + "|";
  for (const auto& img : f.images()) tag += img.to_string() + ";";
  std::string key = cache.key(source_relations, tag);
  if (auto hit = cache.load(key, f.source(), field)) return Ideal(f.source(), field, std::move(*hit));
  Ideal k = kernel_of_map(f, source_relations, opts);
  cache.store(key, k.generators());
  return k;
}

}  // namespace syz
