#include "syzlab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <variant>

#include "echelon.hpp"
#include "syzlab/errors.hpp"

namespace syz {

using detail::Echelon;
using detail::PrimeOps;
using detail::RationalOps;

namespace {

template <class Ops>
std::size_t rank_impl(const std::vector<SparseVector>& vectors, std::size_t dim, Ops ops) {
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vectors[a].size() < vectors[b].size(); });
  Echelon<Ops> ech(dim, ops);
  for (std::size_t i : order) {
    if (ech.rank() == dim) break;
    if (vectors[i].empty()) continue;
    ech.insert(detail::to_native(vectors[i], ech.ops()));
  }
  return ech.rank();
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return detail::with_ops(m.field(), [&](auto ops) {
    std::vector<SparseVector> rows;
    if (m.rows() <= m.cols()) {
      rows.reserve(m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
      return rank_impl(rows, m.cols(), ops);
    }
    return rank_impl(m.columns(), m.rows(), ops);
  });
}

std::size_t cokernel_dim(const Matrix& m) { return m.rows() - rank(m); }

Matrix kernel_basis(const Matrix& m) {
  return detail::with_ops(m.field(), [&](auto ops) {
    using Ops = decltype(ops);
    Echelon<Ops> ech(m.cols(), ops);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m.row(r).empty()) ech.insert(detail::to_native(m.row(r), ech.ops()));
    ech.make_reduced();
    std::vector<std::int64_t> free_index(m.cols(), -1);
    std::vector<SparseVector> kernel;
    for (std::uint32_t c = 0; c < m.cols(); ++c)
      if (ech.pivot_row(c) < 0) {
        free_index[c] = static_cast<std::int64_t>(kernel.size());
        kernel.push_back({{c, FieldElement::one(m.field())}});
      }
    for (const auto& row : ech.rows()) {
      std::uint32_t lead = row.front().first;
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto fi = free_index[row[k].first];
        if (fi >= 0) kernel[fi].emplace_back(lead, -ech.ops().to(row[k].second));
      }
    }
    for (auto& v : kernel) canonicalize(v);
    return Matrix::from_columns(m.cols(), kernel, m.field());
  });
}

struct Subspace::Impl {
  std::variant<Echelon<RationalOps>, Echelon<PrimeOps>> ech;
};

Subspace::Subspace(std::size_t dim, Field field) : field_(field) {
  if (field.is_rational())
    impl_ = std::make_unique<Impl>(Impl{Echelon<RationalOps>(dim, RationalOps{})});
  else
    impl_ = std::make_unique<Impl>(Impl{Echelon<PrimeOps>(dim, PrimeOps{field.p})});
}

Subspace::~Subspace() = default;
Subspace::Subspace(Subspace&&) noexcept = default;
Subspace& Subspace::operator=(Subspace&&) noexcept = default;

std::size_t Subspace::dim() const {
  return std::visit([](const auto& e) { return e.dim(); }, impl_->ech);
}

std::size_t Subspace::rank() const {
  return std::visit([](const auto& e) { return e.rank(); }, impl_->ech);
}

bool Subspace::add(const SparseVector& v) {
  if (v.empty()) return false;
  return std::visit([&](auto& e) { return e.insert(detail::to_native(v, e.ops())); }, impl_->ech);
}

SparseVector Subspace::reduce(const SparseVector& v) {
  return std::visit(
      [&](auto& e) {
        using Ops = std::decay_t<decltype(e.ops())>;
        return detail::from_native<Ops>(e.reduce(detail::to_native(v, e.ops())), e.ops());
      },
      impl_->ech);
}

std::vector<std::uint32_t> Subspace::pivot_columns() const {
  return std::visit([](const auto& e) { return e.pivot_columns(); }, impl_->ech);
}

std::vector<SparseVector> Subspace::reduced_basis() {
  return std::visit(
      [&](auto& e) {
        using Ops = std::decay_t<decltype(e.ops())>;
        e.make_reduced();
        std::vector<SparseVector> out;
        for (const auto& r : e.rows()) out.push_back(detail::from_native<Ops>(r, e.ops()));
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
        return out;
      },
      impl_->ech);
}

}  // namespace syz
