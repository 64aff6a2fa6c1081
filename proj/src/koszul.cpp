#include "syzlab/koszul.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "echelon.hpp"
#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"

namespace syz {

using detail::Echelon;
using detail::PrimeOps;
using detail::RationalOps;

// ---------------------------------------------------------------- data

void GradedModuleData::validate(bool check_commute) const {
  if (dims.empty()) throw MalformedInput("graded module data has no pieces");
  if (dims[0] != 1) throw MalformedInput("dim E_0 must be 1");
  if (mult.size() != dims.size() - 1) throw MalformedInput("multiplication maps missing for some piece");
  for (std::size_t l = 0; l < mult.size(); ++l) {
    if (mult[l].size() != dimV) throw MalformedInput("need one multiplication map per basis vector of V");
    for (const auto& m : mult[l]) {
      if (m.rows() != dims[l + 1] || m.cols() != dims[l])
        throw MalformedInput("multiplication map E_" + std::to_string(l) + " -> E_" + std::to_string(l + 1) +
                             " has the wrong shape");
      if (!(m.field() == field)) throw MalformedInput("multiplication map over another field");
    }
  }
  if (!check_commute) return;
  for (std::size_t l = 0; l + 1 < mult.size(); ++l)
    for (std::size_t a = 0; a < dimV; ++a)
      for (std::size_t b = a + 1; b < dimV; ++b)
        if (!(mult[l + 1][b] * mult[l][a] == mult[l + 1][a] * mult[l][b]))
          throw MalformedInput("multiplication by v" + std::to_string(a) + " and v" + std::to_string(b) +
                               " does not commute on E_" + std::to_string(l));
}

std::string GradedModuleData::to_json() const {
  nlohmann::ordered_json j;
  j["dimV"] = dimV;
  j["pieces"] = nlohmann::ordered_json::array();
  for (std::size_t l = 0; l < dims.size(); ++l) j["pieces"].push_back({{"l", l}, {"dim", dims[l]}});
  j["mult"] = nlohmann::ordered_json::array();
  for (std::size_t l = 0; l < mult.size(); ++l)
    for (std::size_t a = 0; a < mult[l].size(); ++a) {
      auto entries = nlohmann::ordered_json::array();
      const Matrix& m = mult[l][a];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, x] : m.row(r)) entries.push_back({r, c, x.to_string()});
      nlohmann::ordered_json item;
      item["v"] = a;
      item["l"] = l;
      item["matrix"] = std::move(entries);
      j["mult"].push_back(std::move(item));
    }
  j["field"] = field.label();
  return j.dump();
}

GradedModuleData GradedModuleData::from_json(const std::string& text) {
  GradedModuleData e;
  try {
    auto j = nlohmann::json::parse(text);
    e.field = Field::parse(j.value("field", std::string("Q")));
    e.dimV = j.at("dimV").get<std::size_t>();
    std::map<std::size_t, std::size_t> pieces;
    for (const auto& p : j.at("pieces")) pieces[p.at("l").get<std::size_t>()] = p.at("dim").get<std::size_t>();
    for (std::size_t l = 0; l < pieces.size(); ++l) {
      auto it = pieces.find(l);
      if (it == pieces.end()) throw MalformedInput("pieces must be E_0..E_bound without gaps");
      e.dims.push_back(it->second);
    }
    if (e.dims.empty()) throw MalformedInput("no pieces");
    std::vector<std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldElement>>>> trip(
        e.dims.size() - 1, std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldElement>>>(e.dimV));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& m : j.at("mult")) {
      auto a = m.at("v").get<std::size_t>();
      auto l = m.at("l").get<std::size_t>();
      if (a >= e.dimV || l + 1 >= e.dims.size()) throw MalformedInput("multiplication map index out of range");
      if (!seen.insert({l, a}).second) throw MalformedInput("duplicate multiplication map");
      for (const auto& t : m.at("matrix")) {
        auto r = t.at(0).get<std::uint32_t>();
        auto c = t.at(1).get<std::uint32_t>();
        if (r >= e.dims[l + 1] || c >= e.dims[l]) throw MalformedInput("matrix entry out of range");
        trip[l][a].emplace_back(r, c, FieldElement::parse(t.at(2).get<std::string>(), e.field));
      }
    }
    e.mult.resize(trip.size());
    for (std::size_t l = 0; l < trip.size(); ++l)
      for (std::size_t a = 0; a < e.dimV; ++a)
        e.mult[l].push_back(Matrix::from_triplets(e.dims[l + 1], e.dims[l], e.field, std::move(trip[l][a])));
  } catch (const nlohmann::json::exception& ex) {
    throw MalformedInput(std::string("graded module JSON: ") + ex.what());
  }
  e.validate(true);
  return e;
}

// ---------------------------------------------------------------- Koszul complex

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSat / b) return kSat;
  return a * b;
}

// i-subsets of {0..n-1}, stored at their colex rank sum_k C(s_k, k+1).
class Subsets {
 public:
  explicit Subsets(std::size_t n) : n_(n), c_(n + 2, std::vector<std::uint64_t>(n + 2, 0)) {
    for (std::size_t a = 0; a <= n + 1; ++a) {
      c_[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) c_[a][b] = std::min(kSat, c_[a - 1][b - 1] + (b <= a - 1 ? c_[a - 1][b] : 0));
    }
  }

  std::uint64_t binom(std::size_t a, std::size_t b) const { return b > a ? 0 : c_[a][b]; }
  std::uint64_t count(int i) const { return i < 0 || std::size_t(i) > n_ ? 0 : c_[n_][i]; }

  const std::vector<std::vector<std::uint32_t>>& of_size(int i) {
    auto it = cache_.find(i);
    if (it != cache_.end()) return it->second;
    auto& out = cache_[i];
    out.resize(count(i));
    std::vector<std::uint32_t> s;
    enumerate(s, 0, i, out);
    return out;
  }

  // Rank of s with the entry at position `skip` removed.
  std::uint64_t rank_without(const std::vector<std::uint32_t>& s, std::size_t skip) const {
    std::uint64_t r = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k == skip) continue;
      r += binom(s[k], (k < skip ? k : k - 1) + 1);
    }
    return r;
  }

 private:
  void enumerate(std::vector<std::uint32_t>& s, std::uint32_t from, int left,
                 std::vector<std::vector<std::uint32_t>>& out) {
    if (left == 0) {
      std::uint64_t r = 0;
      for (std::size_t k = 0; k < s.size(); ++k) r += binom(s[k], k + 1);
      out[r] = s;
      return;
    }
    for (std::uint32_t a = from; a + left <= n_; ++a) {
      s.push_back(a);
      enumerate(s, a + 1, left - 1, out);
      s.pop_back();
    }
  }

  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> c_;
  std::map<int, std::vector<std::vector<std::uint32_t>>> cache_;
};

inline mpq_class negate(const RationalOps&, const mpq_class& v) { return -v; }
inline std::uint32_t negate(const PrimeOps& o, std::uint32_t v) { return v == 0 ? 0 : o.p - v; }
inline mpq_class times(const RationalOps&, const mpq_class& a, const mpq_class& b) { return a * b; }
inline std::uint32_t times(const PrimeOps& o, std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(std::uint64_t(a) * b % o.p);
}
inline mpq_class plus(const RationalOps&, const mpq_class& a, const mpq_class& b) { return a + b; }
inline std::uint32_t plus(const PrimeOps& o, std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>((std::uint64_t(a) + b) % o.p);
}

template <class Ops>
struct Native {
  using Row = typename Echelon<Ops>::Row;
  Ops ops;
  std::vector<std::vector<std::vector<Row>>> cols;  // cols[l][a][b]
};

template <class Ops, class Conv>
Native<Ops> make_native(const GradedModuleData& e, Ops ops, Conv conv) {
  Native<Ops> nd{ops, {}};
  nd.cols.resize(e.mult.size());
  for (std::size_t l = 0; l < e.mult.size(); ++l) {
    nd.cols[l].resize(e.dimV);
    for (std::size_t a = 0; a < e.dimV; ++a) {
      const Matrix& m = e.mult[l][a];
      auto& cs = nd.cols[l][a];
      cs.resize(m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, x] : m.row(r)) cs[c].emplace_back(static_cast<std::uint32_t>(r), conv(x));
    }
  }
  return nd;
}

// Columns of d_{i,j} : wedge^i V (x) E_j -> wedge^{i-1} V (x) E_{j+1}, with
//   d(e_{s_0} ^ ... ^ e_{s_{i-1}} (x) m) = sum_k (-1)^k e_{s without s_k} (x) v_{s_k} m.
// Basis of wedge^i V (x) E_j: index rank(s) * dim E_j + b.
template <class Ops>
std::vector<typename Echelon<Ops>::Row> differential(Native<Ops>& nd, Subsets& sub,
                                                     const std::vector<std::size_t>& dims, int i, int j) {
  using Row = typename Echelon<Ops>::Row;
  const auto& sets = sub.of_size(i);
  std::size_t dj = dims[j], dj1 = dims[j + 1];
  std::vector<Row> out(sets.size() * dj);
  for (std::size_t si = 0; si < sets.size(); ++si) {
    const auto& s = sets[si];
    for (std::size_t b = 0; b < dj; ++b) {
      Row& col = out[si * dj + b];
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::uint64_t base = sub.rank_without(s, k) * dj1;
        for (const auto& [r, v] : nd.cols[j][s[k]][b])
          col.emplace_back(static_cast<std::uint32_t>(base + r), k % 2 ? negate(nd.ops, v) : v);
      }
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  }
  return out;
}

template <class Ops>
std::size_t rank_of(std::vector<typename Echelon<Ops>::Row> vecs, std::size_t length, const Ops& ops) {
  using Row = typename Echelon<Ops>::Row;
  if (vecs.size() > length) {
    std::vector<Row> t(length);
    for (std::size_t c = 0; c < vecs.size(); ++c)
      for (auto& [r, v] : vecs[c]) t[r].emplace_back(static_cast<std::uint32_t>(c), std::move(v));
    length = vecs.size();
    vecs = std::move(t);
  }
  std::stable_sort(vecs.begin(), vecs.end(), [](const Row& a, const Row& b) { return a.size() < b.size(); });
  Echelon<Ops> ech(length, ops);
  for (const auto& v : vecs) {
    if (ech.rank() == length) break;
    if (!v.empty()) ech.insert(v);
  }
  return ech.rank();
}

// d_{i,j} o d_{i+1,j-1} = 0, entry by entry.
template <class Ops>
void assert_complex(Native<Ops>& nd, Subsets& sub, const std::vector<std::size_t>& dims, int i, int j) {
  using T = typename Ops::T;
  auto left = differential(nd, sub, dims, i + 1, j - 1);
  auto mid = differential(nd, sub, dims, i, j);
  std::vector<std::pair<std::uint32_t, T>> acc;
  for (const auto& u : left) {
    acc.clear();
    for (const auto& [c, x] : u)
      for (const auto& [r, y] : mid[c]) acc.emplace_back(r, times(nd.ops, x, y));
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < acc.size();) {
      T sum = acc[k].second;
      std::size_t m = k + 1;
      for (; m < acc.size() && acc[m].first == acc[k].first; ++m) sum = plus(nd.ops, sum, acc[m].second);
      if (!Ops::is_zero(sum))
        throw Error("Koszul differentials do not compose to zero at (" + std::to_string(i) + "," +
                    std::to_string(j) + "); the module data is inconsistent");
      k = m;
    }
  }
}

}  // namespace

struct KoszulCalculator::Impl {
  const GradedModuleData& e;
  KoszulOptions opts;
  Subsets sub;
  std::optional<Native<RationalOps>> q;
  std::optional<Native<PrimeOps>> p;
  bool p_failed = false;
  std::map<std::pair<int, int>, std::size_t> rank_q, rank_p;
  std::set<std::pair<int, int>> checked_q, checked_p;

  Impl(const GradedModuleData& data, KoszulOptions o) : e(data), opts(o), sub(data.dimV) {}

  Native<RationalOps>& rational() {
    if (!q) q = make_native(e, RationalOps{}, [](const FieldElement& x) { return x.rational(); });
    return *q;
  }

  // Prime arithmetic: the data field itself, or the certification prime.
  Native<PrimeOps>* prime() {
    if (p) return &*p;
    if (p_failed) return nullptr;
    if (!e.field.is_rational()) {
      p = make_native(e, PrimeOps{e.field.p}, [](const FieldElement& x) { return x.residue_value(); });
      return &*p;
    }
    Field fp = Field::prime(opts.certify_prime);
    try {
      p = make_native(e, PrimeOps{fp.p},
                      [&](const FieldElement& x) { return FieldElement::from_rational(x.rational(), fp).residue_value(); });
    } catch (const Error&) {
      p_failed = true;  // a denominator vanishes mod p: certify nothing, compute over Q
      return nullptr;
    }
    return &*p;
  }

  template <class Ops>
  std::size_t d_rank(Native<Ops>& nd, std::map<std::pair<int, int>, std::size_t>& memo, int i, int j) {
    std::size_t n = e.dimV;
    if (i <= 0 || std::size_t(i) > n || j < 0) return 0;
    if (j > e.bound()) throw InsufficientData("E_" + std::to_string(j) + " is not populated");
    if (e.dims[j] == 0) return 0;
    if (j + 1 > e.bound()) throw InsufficientData("E_" + std::to_string(j + 1) + " is not populated");
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    auto cols = differential(nd, sub, e.dims, i, j);
    std::size_t r = rank_of(std::move(cols), sub.count(i - 1) * e.dims[j + 1], nd.ops);
    memo[{i, j}] = r;
    return r;
  }

  template <class Ops>
  long cell(Native<Ops>& nd, std::map<std::pair<int, int>, std::size_t>& memo, std::set<std::pair<int, int>>& checked,
            int i, int j, std::uint64_t n_mid) {
    if (opts.check_complex && i >= 1 && j >= 1 && std::size_t(i) < e.dimV && e.dims[j - 1] > 0 &&
        checked.insert({i, j}).second)
      assert_complex(nd, sub, e.dims, i, j);
    std::size_t r_out = d_rank(nd, memo, i, j);
    std::size_t r_in = d_rank(nd, memo, i + 1, j - 1);
    return static_cast<long>(n_mid - r_out - r_in);
  }

  long betti(int i, int j) {
    if (i < 0 || j < 0 || std::size_t(i) > e.dimV) return 0;
    if (j > e.bound()) throw InsufficientData("E_" + std::to_string(j) + " is not populated");
    std::uint64_t left = j >= 1 ? sat_mul(sub.count(i + 1), e.dims[j - 1]) : 0;
    if (left > opts.cap)
      throw ResourceLimit("Koszul cell (" + std::to_string(i) + "," + std::to_string(j) + ") needs " +
                          std::to_string(left) + " columns, over the cap " + std::to_string(opts.cap));
    std::uint64_t n_mid = sat_mul(sub.count(i), e.dims[j]);
    if (n_mid == 0) return 0;
    if (i >= 1 && j + 1 > e.bound()) throw InsufficientData("E_" + std::to_string(j + 1) + " is not populated");
    std::uint64_t right = j + 1 <= e.bound() ? sat_mul(sub.count(i - 1), e.dims[j + 1]) : 0;
    if (std::max({left, n_mid, right}) > std::numeric_limits<std::uint32_t>::max())
      throw ResourceLimit("Koszul cell too large for 32-bit indices");
    if (!e.field.is_rational()) return cell(*prime(), rank_p, checked_p, i, j, n_mid);
    if (opts.certify_mod_p) {
      if (auto* np = prime()) {
        if (cell(*np, rank_p, checked_p, i, j, n_mid) == 0) return 0;
      }
    }
    return cell(rational(), rank_q, checked_q, i, j, n_mid);
  }
};

KoszulCalculator::KoszulCalculator(const GradedModuleData& e, KoszulOptions opts)
    : impl_(std::make_unique<Impl>(e, opts)) {
  // d^2 = 0 over the data field follows from commutativity; the mod-p
  // certificate relies on it.
  e.validate(true);
}

KoszulCalculator::~KoszulCalculator() = default;

long KoszulCalculator::betti(int i, int j) { return impl_->betti(i, j); }

BettiTable KoszulCalculator::table(int imax, int jmax) {
  BettiTable t;
  t.path = "koszul";
  t.field = impl_->e.field;
  t.imax = imax;
  t.jmax = jmax;
  t.nvars = static_cast<int>(impl_->e.dimV);
  for (int i = 0; i <= imax; ++i)
    for (int j = 0; j <= jmax; ++j) t.set(i, j, betti(i, j));
  return t;
}

long koszul_betti(const GradedModuleData& e, int i, int j, const KoszulOptions& opts) {
  return KoszulCalculator(e, opts).betti(i, j);
}

BettiTable koszul_table(const GradedModuleData& e, int imax, int jmax, const KoszulOptions& opts) {
  return KoszulCalculator(e, opts).table(imax, jmax);
}

NpsResult nps_check(const GradedModuleData& e, int p, int window, const KoszulOptions& opts) {
  if (!e.h1_vanishing_certified)
    throw VanishingCertificateMissing("no certificate for H^1(L^j) = 0, j >= 2; rows beyond the window are unknown");
  if (window < 2) throw MalformedInput("N^S_p window must include j = 2");
  KoszulCalculator calc(e, opts);
  NpsResult res;
  res.window = window;
  for (int i = 0; i <= p; ++i)
    for (int j = 2; j <= window; ++j)
      if (calc.betti(i, j) != 0) {
        res.first_failure = {i, j};
        return res;
      }
  res.holds = true;
  return res;
}

// ---------------------------------------------------------------- submodules, reductions

namespace {

using Columns = std::vector<std::vector<std::vector<SparseVector>>>;  // [l][a][b]

Columns columns_of(const GradedModuleData& e) {
  Columns c(e.mult.size());
  for (std::size_t l = 0; l < e.mult.size(); ++l)
    for (const auto& m : e.mult[l]) c[l].push_back(m.columns());
  return c;
}

SparseVector mat_apply(const std::vector<SparseVector>& cols, const SparseVector& w) {
  SparseVector out;
  for (const auto& [c, x] : w)
    for (const auto& [r, y] : cols[c]) out.emplace_back(r, x * y);
  canonicalize(out);
  return out;
}

}  // namespace

GradedModuleData generated_submodule(const GradedModuleData& e,
                                     const std::vector<std::vector<SparseVector>>& gens) {
  auto cols = columns_of(e);
  int B = e.bound();
  std::vector<Subspace> spans;
  std::vector<std::vector<SparseVector>> basis(B + 1);
  std::vector<std::vector<std::int64_t>> pos(B + 1);
  for (int l = 0; l <= B; ++l) {
    Subspace s(e.dims[l], e.field);
    if (std::size_t(l) < gens.size())
      for (const auto& g : gens[l]) s.add(g);
    if (l >= 1)
      for (const auto& w : basis[l - 1])
        for (std::size_t a = 0; a < e.dimV; ++a) s.add(mat_apply(cols[l - 1][a], w));
    basis[l] = s.reduced_basis();
    pos[l].assign(e.dims[l], -1);
    auto piv = s.pivot_columns();
    for (std::size_t k = 0; k < piv.size(); ++k) pos[l][piv[k]] = static_cast<std::int64_t>(k);
    spans.push_back(std::move(s));
  }
  GradedModuleData out;
  out.field = e.field;
  out.dimV = e.dimV;
  out.h1_vanishing_certified = e.h1_vanishing_certified;
  for (int l = 0; l <= B; ++l) out.dims.push_back(basis[l].size());
  out.mult.resize(B);
  for (int l = 0; l < B; ++l)
    for (std::size_t a = 0; a < e.dimV; ++a) {
      std::vector<SparseVector> mc;
      for (const auto& w : basis[l]) {
        SparseVector v = mat_apply(cols[l][a], w);
        SparseVector coords;
        // v lies in the span, so its pivot entries are its coordinates.
        for (const auto& [c, x] : v)
          if (pos[l + 1][c] >= 0) coords.emplace_back(static_cast<std::uint32_t>(pos[l + 1][c]), x);
        canonicalize(coords);
        mc.push_back(std::move(coords));
      }
      out.mult[l].push_back(Matrix::from_columns(out.dims[l + 1], mc, e.field));
    }
  return out;
}

GradedModuleData generated_by_degree_zero(const GradedModuleData& e) {
  std::vector<std::vector<SparseVector>> gens(1);
  for (std::uint32_t b = 0; b < e.dims.at(0); ++b) gens[0].push_back({{b, FieldElement::one(e.field)}});
  return generated_submodule(e, gens);
}

GradedModuleData birkenhake(const GradedModuleData& e) {
  std::vector<std::vector<SparseVector>> gens(e.dims.size());
  for (std::size_t l = 0; l < e.dims.size(); ++l) {
    if (l == 1) continue;
    for (std::uint32_t b = 0; b < e.dims[l]; ++b) gens[l].push_back({{b, FieldElement::one(e.field)}});
  }
  return generated_submodule(e, gens);
}

std::vector<std::size_t> restriction_ranks(const GradedModuleData& e) { return generated_by_degree_zero(e).dims; }

GradedModuleData artinian_reduction(const GradedModuleData& e, std::size_t c, std::uint64_t seed, int tries) {
  if (c == 0) return e;
  if (c >= e.dimV) throw MalformedInput("cannot cut by as many linear forms as dim V");
  auto cols = columns_of(e);
  int B = e.bound();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < tries; ++attempt) {
    std::vector<std::vector<FieldElement>> coeff(c, std::vector<FieldElement>(e.dimV));
    Subspace forms(e.dimV, e.field);
    bool independent = true;
    for (auto& row : coeff) {
      SparseVector v;
      for (std::size_t a = 0; a < e.dimV; ++a) {
        row[a] = FieldElement::from_rational(mpq_class(static_cast<long>(rng() % 203) - 101), e.field);
        v.emplace_back(static_cast<std::uint32_t>(a), row[a]);
      }
      canonicalize(v);
      independent = forms.add(v) && independent;
    }
    if (!independent) continue;

    std::vector<Subspace> spans;
    for (int l = 0; l <= B; ++l) spans.emplace_back(e.dims[l], e.field);
    std::vector<std::size_t> h(e.dims.begin(), e.dims.end());
    bool regular = true;
    for (std::size_t k = 0; k < c && regular; ++k) {
      for (int l = 1; l <= B && regular; ++l) {
        std::size_t before = spans[l].rank();
        for (std::uint32_t q = 0; q < e.dims[l - 1]; ++q) {
          SparseVector v;
          for (std::size_t a = 0; a < e.dimV; ++a)
            for (const auto& [r, y] : cols[l - 1][a][q]) v.emplace_back(r, coeff[k][a] * y);
          canonicalize(v);
          spans[l].add(v);
        }
        // l_k is injective on the previous quotient in degree l-1 exactly when
        // the span grows by that quotient's dimension.
        if (spans[l].rank() - before != h[l - 1]) regular = false;
      }
      for (int l = 0; l <= B; ++l) h[l] = e.dims[l] - spans[l].rank();
    }
    if (!regular) continue;

    auto vpiv = forms.pivot_columns();
    std::vector<std::uint32_t> keep;
    for (std::uint32_t a = 0; a < e.dimV; ++a)
      if (!std::binary_search(vpiv.begin(), vpiv.end(), a)) keep.push_back(a);
    std::vector<std::vector<std::int64_t>> pos(B + 1);
    GradedModuleData out;
    out.field = e.field;
    out.dimV = keep.size();
    out.h1_vanishing_certified = e.h1_vanishing_certified;
    std::vector<std::vector<std::uint32_t>> free_cols(B + 1);
    for (int l = 0; l <= B; ++l) {
      auto piv = spans[l].pivot_columns();
      pos[l].assign(e.dims[l], -1);
      for (std::uint32_t b = 0; b < e.dims[l]; ++b)
        if (!std::binary_search(piv.begin(), piv.end(), b)) {
          pos[l][b] = static_cast<std::int64_t>(free_cols[l].size());
          free_cols[l].push_back(b);
        }
      out.dims.push_back(free_cols[l].size());
    }
    out.mult.resize(B);
    for (int l = 0; l < B; ++l)
      for (std::uint32_t a : keep) {
        std::vector<SparseVector> mc;
        for (std::uint32_t b : free_cols[l]) {
          SparseVector rem = spans[l + 1].reduce(cols[l][a][b]);
          SparseVector coords;
          for (const auto& [r, x] : rem) coords.emplace_back(static_cast<std::uint32_t>(pos[l + 1][r]), x);
          canonicalize(coords);
          mc.push_back(std::move(coords));
        }
        out.mult[l].push_back(Matrix::from_columns(out.dims[l + 1], mc, e.field));
      }
    return out;
  }
  throw RetriesExhausted("no regular sequence of " + std::to_string(c) + " linear forms found in " +
                         std::to_string(tries) + " draws");
}

}  // namespace syz
