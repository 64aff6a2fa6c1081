#include "syzlab/geometry.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"

namespace syz {

namespace {

long binom(long a, long b) {
  if (b < 0 || a < b) return 0;
  long r = 1;
  for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

// Calls fn(alpha) for every exponent vector of length k with |alpha| = total.
template <class Fn>
void for_each_composition(int k, int total, Fn&& fn) {
  std::vector<int> alpha(k, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      alpha[pos] = left;
      fn(alpha);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      alpha[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (k == 0) {
    if (total == 0) fn(alpha);
    return;
  }
  rec(rec, 0, total);
}

using UPoly = std::vector<mpq_class>;  // coefficients, low degree first

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly poly_mod(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

// Degree of gcd(a, b) over Q.
int gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

std::shared_ptr<const GroebnerBasis> relations_basis(const EmbeddedVariety& v) {
  if (v.relations.empty()) return nullptr;
  return std::make_shared<const GroebnerBasis>(buchberger(Ideal(v.ring, v.field, v.relations)));
}

EmbeddedVariety finish(EmbeddedVariety v) {
  v.relations_gb = relations_basis(v);
  v.h0_basis = v.piece_basis(1);
  v.v_coords.assign(v.h0_basis.size(), std::vector<FieldElement>(v.h0_basis.size(), FieldElement::zero(v.field)));
  for (std::size_t a = 0; a < v.h0_basis.size(); ++a) v.v_coords[a][a] = FieldElement::one(v.field);
  return v;
}

}  // namespace

std::vector<mpq_class> default_sextic() { return {-1, 0, 0, 0, 0, 0, 1}; }

int EmbeddedVariety::dim() const {
  switch (kind) {
    case FixtureKind::veronese: return n;
    case FixtureKind::scroll: return static_cast<int>(twists.size());
    case FixtureKind::hyperelliptic: return 1;
  }
  return 0;
}

int EmbeddedVariety::degree() const {
  switch (kind) {
    case FixtureKind::veronese: {
      int r = 1;
      for (int k = 0; k < n; ++k) r *= d;
      return r;
    }
    case FixtureKind::scroll: {
      int s = 0;
      for (int a : twists) s += a;
      return s;
    }
    case FixtureKind::hyperelliptic: return 2 * m;
  }
  return 0;
}

std::vector<int> EmbeddedVariety::piece_degree(int l) const {
  switch (kind) {
    case FixtureKind::veronese: return {d * l};
    case FixtureKind::scroll: return {l, l * (twists.front() + 1)};
    case FixtureKind::hyperelliptic: return {m * l};
  }
  return {};
}

std::vector<Monomial> EmbeddedVariety::piece_basis(int l) const {
  if (l < 0) return {};
  auto mons = monomials_of_degree(*ring, piece_degree(l));
  if (!relations_gb) return mons;
  std::vector<Monomial> out;
  for (const auto& mono : mons) {
    bool standard = true;
    for (const auto& g : relations_gb->basis)
      if (g.leading_monomial().divides(mono)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(mono);
  }
  return out;
}

std::vector<Polynomial> EmbeddedVariety::v_polys() const {
  std::vector<Polynomial> out;
  for (const auto& row : v_coords) {
    std::vector<Term> terms;
    for (std::size_t b = 0; b < row.size(); ++b)
      if (!row[b].is_zero()) terms.push_back({h0_basis[b], row[b]});
    out.push_back(Polynomial::from_terms(ring, field, std::move(terms)));
  }
  return out;
}

std::string EmbeddedVariety::descriptor() const {
  std::string s;
  switch (kind) {
    case FixtureKind::veronese:
      s = "veronese(" + std::to_string(n) + "," + std::to_string(d) + ")";
      break;
    case FixtureKind::scroll: {
      s = "scroll(";
      for (std::size_t i = 0; i < twists.size(); ++i) s += (i ? "," : "") + std::to_string(twists[i]);
      s += ")";
      break;
    }
    case FixtureKind::hyperelliptic: {
      s = "hyperelliptic(m=" + std::to_string(m);
      if (sextic != default_sextic()) {
        s += ",f=";
        for (std::size_t i = 0; i < sextic.size(); ++i) s += (i ? ":" : "") + sextic[i].get_str();
      }
      s += ")";
      break;
    }
  }
  if (t > 0) s += " t=" + std::to_string(t) + " seed=" + std::to_string(seed);
  if (!field.is_rational()) s += " over " + field.label();
  return s;
}

EmbeddedVariety veronese(int n, int d, Field field) {
  if (n < 1 || d < 1) throw MalformedInput("veronese needs n >= 1 and d >= 1");
  EmbeddedVariety v;
  v.kind = FixtureKind::veronese;
  v.n = n;
  v.d = d;
  v.field = field;
  v.ring = Ring::standard("x", n + 1);
  return finish(std::move(v));
}

EmbeddedVariety rational_scroll(std::vector<int> twists, Field field) {
  if (twists.empty()) throw MalformedInput("scroll needs at least one twist");
  for (int a : twists)
    if (a < 1) throw MalformedInput("scroll twists must be >= 1");
  std::sort(twists.begin(), twists.end(), std::greater<>());
  EmbeddedVariety v;
  v.kind = FixtureKind::scroll;
  v.twists = twists;
  v.field = field;
  int A = twists.front();
  std::vector<std::string> names{"s", "t"};
  std::vector<std::vector<int>> degs{{0, 1}, {0, 1}};
  for (std::size_t i = 0; i < twists.size(); ++i) {
    names.push_back("l" + std::to_string(i + 1));
    degs.push_back({1, A - twists[i] + 1});
  }
  v.ring = std::make_shared<const Ring>(names, degs);
  return finish(std::move(v));
}

EmbeddedVariety hyperelliptic_g2(std::vector<mpq_class> sextic, int m, Field field) {
  if (m < 2) throw MalformedInput("hyperelliptic fixture needs m >= 2");
  sextic.resize(std::max<std::size_t>(sextic.size(), 7));
  for (std::size_t i = 7; i < sextic.size(); ++i)
    if (sgn(sextic[i]) != 0) throw MalformedInput("f must have degree 6");
  sextic.resize(7);
  if (sgn(sextic[6]) == 0) throw MalformedInput("f must have degree exactly 6");
  UPoly deriv;
  for (std::size_t i = 1; i < sextic.size(); ++i) deriv.push_back(sextic[i] * static_cast<long>(i));
  if (gcd_degree(sextic, deriv) > 0) throw MalformedInput("f is not squarefree; the curve would be singular");
  EmbeddedVariety v;
  v.kind = FixtureKind::hyperelliptic;
  v.sextic = sextic;
  v.m = m;
  v.field = field;
  v.ring = std::make_shared<const Ring>(std::vector<std::string>{"y", "u", "w"},
                                        std::vector<std::vector<int>>{{3}, {1}, {1}});
  // y^2 - w^6 f(u/w)
  std::vector<Term> terms{{Monomial::from_exponents({2, 0, 0}), FieldElement::one(field)}};
  for (int i = 0; i <= 6; ++i)
    if (sgn(sextic[i]) != 0) {
      FieldElement c = FieldElement::from_rational(-sextic[i], field);
      if (!c.is_zero()) terms.push_back({Monomial::from_exponents({0, i, 6 - i}), c});
    }
  if (!field.is_rational() && terms.size() == 1) throw MalformedInput("f vanishes modulo p");
  v.relations.push_back(Polynomial::from_terms(v.ring, field, std::move(terms)));
  return finish(std::move(v));
}

long oracle_h(const EmbeddedVariety& v, int i, int k) {
  if (i < 0) throw Unsupported("negative cohomology index");
  int dimX = v.dim();
  if (i > dimX) return 0;
  switch (v.kind) {
    case FixtureKind::veronese: {
      long e = static_cast<long>(v.d) * k;
      if (i == 0) return e >= 0 ? binom(v.n + e, v.n) : 0;
      if (i == v.n) return e <= -v.n - 1 ? binom(-e - 1, v.n) : 0;
      return 0;
    }
    case FixtureKind::scroll: {
      int r = dimX;
      long sum_a = 0;
      for (int a : v.twists) sum_a += a;
      long total = 0;
      if (i == 0 && k >= 0) {
        for_each_composition(r, k, [&](const std::vector<int>& al) {
          long e = 0;
          for (int q = 0; q < r; ++q) e += static_cast<long>(al[q]) * v.twists[q];
          total += e + 1;
        });
        return total;
      }
      // R^{r-1} pi_* O(k) = (Sym^{-k-r} E)^dual (x) det E^dual for k <= -r.
      if (i == r && k <= -r) {
        for_each_composition(r, -k - r, [&](const std::vector<int>& al) {
          long e = sum_a;
          for (int q = 0; q < r; ++q) e += static_cast<long>(al[q]) * v.twists[q];
          total += e - 1;
        });
        return total;
      }
      return 0;
    }
    case FixtureKind::hyperelliptic: {
      long j = static_cast<long>(v.m) * k;  // L^k = j K_inf, degree 2j
      auto h0 = [](long q) -> long { return q < 0 ? 0 : q == 0 ? 1 : q == 1 ? 2 : 2 * q - 1; };
      if (i == 0) return h0(j);
      return h0(1 - j);  // Serre duality, K = K_inf
    }
  }
  throw Unsupported("unknown fixture kind");
}

int regularity_of_OX(const EmbeddedVariety& v) {
  auto regular = [&](int m) {
    for (int i = 1; i <= v.dim(); ++i)
      if (oracle_h(v, i, m - i) != 0) return false;
    return true;
  };
  // Once m works every larger value does; scan down from a value that works.
  int m = 32;
  if (!regular(m)) throw NotFound("O_X is not 32-regular");
  while (m > -32 && regular(m - 1)) --m;
  return m;
}

bool certify_h1_vanishing(const EmbeddedVariety& v) {
  // Closed forms: H^1 vanishes in every degree for veronese with n >= 2 and
  // scrolls of dimension >= 2, and for degrees above 2g - 2 on curves; the
  // loop confirms this through j = 64 where every form is eventually zero.
  for (int j = 2; j <= 64; ++j)
    if (oracle_h(v, 1, j) != 0) return false;
  return true;
}

GradedModuleData build_E(const EmbeddedVariety& v, int degree_bound) {
  if (degree_bound < 1) throw MalformedInput("degree bound must be >= 1");
  std::vector<std::vector<Monomial>> bases;
  std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index;
  for (int l = 0; l <= degree_bound; ++l) {
    bases.push_back(v.piece_basis(l));
    auto& idx = index.emplace_back();
    for (std::uint32_t q = 0; q < bases[l].size(); ++q) idx[bases[l][q]] = q;
  }
  GradedModuleData e;
  e.field = v.field;
  e.dimV = v.v_coords.size();
  for (const auto& b : bases) e.dims.push_back(b.size());
  e.mult.resize(degree_bound);
  FieldElement one = FieldElement::one(v.field);
  for (int l = 0; l < degree_bound; ++l) {
    // prod[b][q]: the h0 basis element b times basis element q of E_l.
    std::vector<std::vector<SparseVector>> prod(v.h0_basis.size(), std::vector<SparseVector>(bases[l].size()));
    for (std::size_t b = 0; b < v.h0_basis.size(); ++b)
      for (std::size_t q = 0; q < bases[l].size(); ++q) {
        Monomial mono = v.h0_basis[b] * bases[l][q];
        SparseVector col;
        auto it = index[l + 1].find(mono);
        if (it != index[l + 1].end()) {
          col.emplace_back(it->second, one);
        } else {
          Polynomial p = normal_form(Polynomial::monomial(v.ring, mono, one), *v.relations_gb);
          for (const auto& term : p.terms()) col.emplace_back(index[l + 1].at(term.mono), term.coeff);
          canonicalize(col);
        }
        prod[b][q] = std::move(col);
      }
    for (const auto& row : v.v_coords) {
      std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldElement>> trip;
      for (std::size_t b = 0; b < row.size(); ++b) {
        if (row[b].is_zero()) continue;
        for (std::uint32_t q = 0; q < bases[l].size(); ++q)
          for (const auto& [r, x] : prod[b][q]) trip.emplace_back(r, q, row[b] * x);
      }
      e.mult[l].push_back(Matrix::from_triplets(e.dims[l + 1], e.dims[l], v.field, std::move(trip)));
    }
  }
  e.h1_vanishing_certified = certify_h1_vanishing(v);
  return e;
}

namespace {

GroebnerOptions image_options(const EmbeddedVariety& v) {
  GroebnerOptions opts;
  int w = 0;
  for (int x : v.piece_degree(1)) w += x;
  opts.degree_cap = 30 * std::max(w, 1);
  return opts;
}

// The same fixture with every coefficient reduced mod p (throws when a
// denominator vanishes).
EmbeddedVariety reduce_fixture(const EmbeddedVariety& v, const Field& fp) {
  EmbeddedVariety w = v;
  w.field = fp;
  w.relations.clear();
  for (const auto& r : v.relations) w.relations.push_back(r.reduce_to(fp));
  w.relations_gb = relations_basis(w);
  for (auto& row : w.v_coords)
    for (auto& x : row) x = FieldElement::from_rational(x.rational(), fp);
  return w;
}

bool hilbert_polynomial_matches(const EmbeddedVariety& v, const GroebnerCache* cache) {
  Ideal I = image_ideal(v, cache);
  GroebnerBasis gb = buchberger(I, image_options(v));
  return is_isomorphic_embedding(gb, [&](int k) { return oracle_h(v, 0, k); }, v.dim(), 1);
}

}  // namespace

Ideal image_ideal(const EmbeddedVariety& v, const GroebnerCache* cache) {
  auto S = Ring::standard("z", v.v_coords.size());
  RingMap f(S, v.ring, v.v_polys());
  Ideal rel(v.ring, v.field, v.relations);
  if (cache) return kernel_of_map_cached(f, rel, *cache, image_options(v));
  return kernel_of_map(f, rel, image_options(v));
}

bool is_isomorphic_embedding(const EmbeddedVariety& v, const GroebnerCache* cache) {
  if (v.field.is_rational()) {
    // Mod p the Hilbert function of the image can only drop, and it never
    // exceeds h^0(L^k); a match mod p therefore certifies the match over Q.
    try {
      if (hilbert_polynomial_matches(reduce_fixture(v, Field::prime(Field::kDefaultPrime)), cache)) return true;
    } catch (const MalformedInput&) {
    }
  }
  return hilbert_polynomial_matches(v, cache);
}

EmbeddedVariety project(const EmbeddedVariety& v, int t, std::uint64_t seed, int max_retries,
                        const GroebnerCache* cache) {
  if (t < 0) throw MalformedInput("projection codimension must be >= 0");
  if (t == 0) return v;
  int dimV = v.dimV();
  if (t >= dimV - v.dim() - 1)
    throw MalformedInput("projecting " + v.descriptor() + " from " + std::to_string(t) +
                         " points leaves no room for an embedding");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<std::vector<FieldElement>> F(t, std::vector<FieldElement>(dimV));
    for (auto& row : F)
      for (auto& x : row) x = FieldElement::from_rational(mpq_class(static_cast<long>(rng() % 203) - 101), v.field);
    Matrix K = kernel_basis(Matrix::from_dense(F, v.field));
    if (static_cast<int>(K.cols()) != dimV - t) continue;
    EmbeddedVariety w = v;
    w.v_coords.clear();
    for (auto col : K.columns()) {
      if (v.field.is_rational()) {
        mpz_class den = 1, num = 0;
        for (const auto& [i, x] : col) {
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational().get_den_mpz_t());
          mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.rational().get_num_mpz_t());
        }
        mpq_class q(den, num);
        q.canonicalize();
        FieldElement scale(q);
        for (auto& [i, x] : col) x *= scale;
      }
      std::vector<FieldElement> row(v.h0L(), FieldElement::zero(v.field));
      for (const auto& [i, x] : col)
        for (int b = 0; b < v.h0L(); ++b) row[b] += x * v.v_coords[i][b];
      w.v_coords.push_back(std::move(row));
    }
    w.t = v.t + t;
    w.seed = seed;
    w.retries = attempt;
    if (is_isomorphic_embedding(w, cache)) return w;
  }
  throw RetriesExhausted("no isomorphic projection of " + v.descriptor() + " from " + std::to_string(t) +
                         " points in " + std::to_string(max_retries) + " draws (seed " + std::to_string(seed) + ")");
}

}  // namespace syz
