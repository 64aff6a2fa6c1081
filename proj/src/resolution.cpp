#include "syzlab/resolution.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"

namespace syz {

namespace {

class MonomialIndex {
 public:
  explicit MonomialIndex(RingPtr ring) : ring_(std::move(ring)) {}

  const std::vector<Monomial>& of(int d) {
    grow(d);
    static const std::vector<Monomial> none;
    return d < 0 ? none : lists_[d];
  }
  std::uint32_t index(const Monomial& m, int d) {
    grow(d);
    return maps_[d].at(m);
  }
  const RingPtr& ring() const { return ring_; }

 private:
  void grow(int d) {
    while (static_cast<int>(lists_.size()) <= d) {
      int e = static_cast<int>(lists_.size());
      lists_.push_back(monomials_of_degree(*ring_, e));
      auto& mp = maps_.emplace_back();
      for (std::uint32_t i = 0; i < lists_.back().size(); ++i) mp[lists_.back()[i]] = i;
    }
  }
  RingPtr ring_;
  std::vector<std::vector<Monomial>> lists_;
  std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> maps_;
};

// Degree-d piece of sum_k S(-g_k): basis (k, mu), |mu| = d - g_k, blocks by k.
class FreeModule {
 public:
  FreeModule(MonomialIndex& mons, std::vector<int> gdeg) : mons_(&mons), gdeg_(std::move(gdeg)) {}

  std::size_t ngens() const { return gdeg_.size(); }
  int gen_degree(std::size_t k) const { return gdeg_[k]; }
  void add_generator(int g) { gdeg_.push_back(g); offsets_.clear(); }

  std::size_t dim(int d) { return offsets(d).back(); }
  std::uint32_t index(std::size_t k, const Monomial& mu, int d) {
    return static_cast<std::uint32_t>(offsets(d)[k] + mons_->index(mu, d - gdeg_[k]));
  }
  std::pair<std::size_t, Monomial> basis(int d, std::uint32_t idx) {
    const auto& off = offsets(d);
    std::size_t k = std::upper_bound(off.begin(), off.end(), idx) - off.begin() - 1;
    return {k, mons_->of(d - gdeg_[k])[idx - off[k]]};
  }
  // v in degree e times the monomial mu.
  SparseVector shift(const SparseVector& v, int e, const Monomial& mu) {
    int d = e + mu.total_degree();
    SparseVector out;
    out.reserve(v.size());
    for (const auto& [idx, x] : v) {
      auto [k, m] = basis(e, idx);
      out.emplace_back(index(k, m * mu, d), x);
    }
    canonicalize(out);
    return out;
  }

 private:
  const std::vector<std::size_t>& offsets(int d) {
    auto it = offsets_.find(d);
    if (it != offsets_.end()) return it->second;
    std::vector<std::size_t> off{0};
    for (int g : gdeg_) off.push_back(off.back() + mons_->of(d - g).size());
    return offsets_[d] = std::move(off);
  }
  MonomialIndex* mons_;
  std::vector<int> gdeg_;
  std::map<int, std::vector<std::size_t>> offsets_;
};

// Generators of one step: degrees and images in the previous free module.
struct Step {
  std::vector<int> degrees;
  std::vector<SparseVector> images;  // images[k] lives in degree degrees[k]
};

// Span of mu * image(h) over generators h of degree < d.
Subspace lower_span(FreeModule& target, const Step& step, int d, MonomialIndex& mons, std::size_t dim,
                    const Field& field) {
  Subspace L(dim, field);
  for (std::size_t h = 0; h < step.degrees.size(); ++h) {
    int g = step.degrees[h];
    if (g >= d) continue;
    for (const auto& mu : mons.of(d - g)) L.add(target.shift(step.images[h], g, mu));
  }
  return L;
}

std::vector<Polynomial> to_column(FreeModule& F, const SparseVector& v, int d, const RingPtr& ring,
                                  const Field& field) {
  std::vector<std::vector<Term>> terms(F.ngens());
  for (const auto& [idx, x] : v) {
    auto [k, mu] = F.basis(d, idx);
    terms[k].push_back({mu, x});
  }
  std::vector<Polynomial> col;
  for (auto& t : terms) col.push_back(Polynomial::from_terms(ring, field, std::move(t)));
  return col;
}

SparseVector from_column(FreeModule& F, const std::vector<Polynomial>& col, int d) {
  SparseVector v;
  for (std::size_t k = 0; k < col.size(); ++k)
    for (const auto& term : col[k].terms()) v.emplace_back(F.index(k, term.mono, d), term.coeff);
  canonicalize(v);
  return v;
}

}  // namespace

GradedPresentation GradedPresentation::quotient(const Ideal& ideal) {
  GradedPresentation p;
  p.ring = ideal.ring();
  p.field = ideal.field();
  p.generator_degrees = {0};
  for (const auto& g : ideal.generators()) {
    p.relations.push_back({g});
    p.relation_degrees.push_back(g.weighted_degree());
  }
  return p;
}

void GradedPresentation::validate() const {
  if (!ring) throw MalformedInput("presentation without a ring");
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (ring->degree(v) != std::vector<int>{1}) throw Unsupported("resolutions need a standard graded ring");
  if (relations.size() != relation_degrees.size()) throw MalformedInput("one degree per relation column");
  for (std::size_t c = 0; c < relations.size(); ++c) {
    if (relations[c].size() != generator_degrees.size()) throw MalformedInput("relation column of the wrong length");
    bool nonzero = false;
    for (std::size_t r = 0; r < relations[c].size(); ++r) {
      const Polynomial& f = relations[c][r];
      if (f.is_zero()) continue;
      nonzero = true;
      if (!same_ring(f.ring(), ring) || !(f.field() == field)) throw MalformedInput("relation entry outside the ring");
      if (!f.is_homogeneous() || f.weighted_degree() != relation_degrees[c] - generator_degrees[r])
        throw MalformedInput("relation entry has the wrong degree");
      if (f.weighted_degree() == 0)
        throw MalformedInput("relation with a unit entry: the generators are not minimal");
    }
    if (!nonzero) throw MalformedInput("zero relation column");
  }
}

BettiTable minimal_betti(const GradedPresentation& p, int imax, int jmax) {
  p.validate();
  if (imax < 0 || jmax < 0) throw MalformedInput("negative Betti window");
  int n = static_cast<int>(p.ring->nvars());
  int c = p.complete_through;
  int jvalid = imax >= 1 ? (c == INT_MAX ? INT_MAX : c - 1) : c;
  if (jmax > jvalid)
    throw IncompletePresentation("presentation known through degree " + std::to_string(c) +
                                 "; rows j > " + std::to_string(jvalid) + " are not determined");
  MonomialIndex mons(p.ring);
  BettiTable t;
  t.path = "resolution";
  t.field = p.field;
  t.imax = imax;
  t.jmax = jmax;
  t.nvars = n;
  for (int i = 0; i <= imax; ++i)
    for (int j = 0; j <= jmax; ++j) t.set(i, j, 0);

  std::vector<FreeModule> F;
  F.emplace_back(mons, p.generator_degrees);
  for (int g : p.generator_degrees)
    if (g >= 0 && g <= jmax) t.entries[{0, g}] += 1;
  if (imax == 0) return t;

  // Step 1: relations that are new modulo the ones already chosen.
  Step prev;
  {
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t col = 0; col < p.relations.size(); ++col) by_degree[p.relation_degrees[col]].push_back(col);
    for (const auto& [d, cols] : by_degree) {
      if (d - 1 > jmax) break;
      Subspace L = lower_span(F[0], prev, d, mons, F[0].dim(d), p.field);
      for (std::size_t col : cols) {
        SparseVector v = from_column(F[0], p.relations[col], d);
        if (L.add(v)) {
          prev.degrees.push_back(d);
          prev.images.push_back(std::move(v));
        }
      }
    }
    for (int d : prev.degrees) t.entries[{1, d - 1}] += 1;
  }
  F.emplace_back(mons, prev.degrees);

  // Step i: kernel of phi_{i-1} in degree d modulo the span of lower syzygies.
  for (int i = 2; i <= imax && i <= n; ++i) {
    Step cur;
    FreeModule& src = F[i - 1];
    if (src.ngens() == 0) break;
    int dmin = *std::min_element(prev.degrees.begin(), prev.degrees.end()) + 1;
    for (int d = dmin; d <= i + jmax; ++d) {
      std::size_t ncols = src.dim(d);
      if (ncols == 0) continue;
      Subspace L = lower_span(src, cur, d, mons, ncols, p.field);
      auto piv = L.pivot_columns();
      std::vector<std::uint32_t> free_cols;
      for (std::uint32_t col = 0; col < ncols; ++col)
        if (!std::binary_search(piv.begin(), piv.end(), col)) free_cols.push_back(col);
      if (free_cols.empty()) continue;
      std::vector<SparseVector> columns;
      columns.reserve(free_cols.size());
      for (std::uint32_t col : free_cols) {
        auto [k, mu] = src.basis(d, col);
        columns.push_back(F[i - 2].shift(prev.images[k], prev.degrees[k], mu));
      }
      Matrix B = Matrix::from_columns(F[i - 2].dim(d), columns, p.field);
      for (const auto& kv : kernel_basis(B).columns()) {
        SparseVector lifted;
        for (const auto& [idx, x] : kv) lifted.emplace_back(free_cols[idx], x);
        canonicalize(lifted);
        cur.degrees.push_back(d);
        cur.images.push_back(std::move(lifted));
      }
    }
    for (int d : cur.degrees)
      if (d - i <= jmax) t.entries[{i, d - i}] += 1;
    F.emplace_back(mons, cur.degrees);
    prev = std::move(cur);
  }
  return t;
}

GradedPresentation present_E(const GradedModuleData& e, int degree_bound) {
  if (degree_bound > e.bound())
    throw InsufficientData("E is populated through degree " + std::to_string(e.bound()) + ", not " +
                           std::to_string(degree_bound));
  auto ring = Ring::standard("z", e.dimV);
  MonomialIndex mons(ring);
  std::vector<std::vector<std::vector<SparseVector>>> cols(degree_bound);  // [l][a][b]
  for (int l = 0; l < degree_bound; ++l)
    for (const auto& m : e.mult[l]) cols[l].push_back(m.columns());
  auto times = [&](int l, std::size_t a, const SparseVector& w) {
    SparseVector out;
    for (const auto& [b, x] : w)
      for (const auto& [r, y] : cols[l][a][b]) out.emplace_back(r, x * y);
    canonicalize(out);
    return out;
  };

  GradedPresentation p;
  p.ring = ring;
  p.field = e.field;
  p.complete_through = degree_bound;
  std::vector<SparseVector> gen_vectors;  // in E_{generator degree}
  FreeModule F0(mons, {});
  // images[d][idx]: image in E_d of basis element idx of (F_0)_d
  std::vector<std::vector<SparseVector>> images(degree_bound + 1);
  Step rel;
  for (int d = 0; d <= degree_bound; ++d) {
    // Generators: a complement of V E_{d-1} in E_d, taken from unit vectors.
    Subspace W(e.dims[d], e.field);
    if (d >= 1)
      for (const auto& img : images[d - 1])
        for (std::size_t a = 0; a < e.dimV; ++a) W.add(times(d - 1, a, img));
    for (std::uint32_t b = 0; b < e.dims[d]; ++b) {
      SparseVector unit{{b, FieldElement::one(e.field)}};
      if (W.add(unit)) {
        F0.add_generator(d);
        p.generator_degrees.push_back(d);
        gen_vectors.push_back(unit);
      }
    }
    std::size_t dim = F0.dim(d);
    images[d].resize(dim);
    for (std::uint32_t idx = 0; idx < dim; ++idx) {
      auto [k, mu] = F0.basis(d, idx);
      if (mu.total_degree() == 0) {
        images[d][idx] = gen_vectors[k];
        continue;
      }
      std::size_t a = 0;
      while (mu[a] == 0) ++a;
      Monomial rest = mu / Monomial::from_exponents([&] {
        std::vector<int> ex(e.dimV, 0);
        ex[a] = 1;
        return ex;
      }());
      images[d][idx] = times(d - 1, a, images[d - 1][F0.index(k, rest, d - 1)]);
    }
    // Relations: kernel of (F_0)_d -> E_d, new modulo lower relations.
    if (d == 0 || dim == 0) continue;
    Subspace L = lower_span(F0, rel, d, mons, dim, e.field);
    Matrix A = Matrix::from_columns(e.dims[d], images[d], e.field);
    for (const auto& kv : kernel_basis(A).columns())
      if (L.add(kv)) {
        rel.degrees.push_back(d);
        rel.images.push_back(kv);
      }
  }
  for (std::size_t c = 0; c < rel.degrees.size(); ++c) {
    int d = rel.degrees[c];
    // Offsets of (F_0)_d depend on the generators of degree <= d only, all present.
    p.relations.push_back(to_column(F0, rel.images[c], d, ring, e.field));
    p.relation_degrees.push_back(d);
  }
  return p;
}

}  // namespace syz
