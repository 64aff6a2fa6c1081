#include "syzlab/matrix.hpp"

#include <algorithm>

#include "syzlab/errors.hpp"

namespace syz {

void canonicalize(SparseVector& v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [i, x] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += x;
    else
      out.emplace_back(i, std::move(x));
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  v = std::move(out);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, FieldElement::one(field));
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<FieldElement>>& rows, Field field) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MalformedInput("ragged dense matrix");
    SparseVector v;
    for (std::size_t c = 0; c < cols; ++c)
      if (!rows[r][c].is_zero()) v.emplace_back(c, rows[r][c]);
    m.data_[r] = std::move(v);
  }
  return m;
}

Matrix Matrix::from_triplets(std::size_t rows, std::size_t cols, Field field,
                             std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldElement>> entries) {
  Matrix m(rows, cols, field);
  for (auto& [r, c, x] : entries) {
    if (r >= rows || c >= cols) throw MalformedInput("matrix entry out of bounds");
    m.data_[r].emplace_back(c, std::move(x));
  }
  for (auto& row : m.data_) canonicalize(row);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns, Field field) {
  Matrix m(rows, columns.size(), field);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, x] : columns[c]) {
      if (r >= rows) throw MalformedInput("column entry out of bounds");
      m.data_[r].emplace_back(c, x);
    }
  for (auto& row : m.data_) canonicalize(row);
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void Matrix::set_row(std::size_t r, SparseVector v) {
  canonicalize(v);
  if (!v.empty() && v.back().first >= cols_) throw MalformedInput("row entry out of bounds");
  data_.at(r) = std::move(v);
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != row.end() && it->first == c) return it->second;
  return FieldElement::zero(field_);
}

std::vector<SparseVector> Matrix::columns() const {
  std::vector<SparseVector> cols(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r]) cols[c].emplace_back(r, x);
  return cols;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  t.data_ = columns();
  return t;
}

Matrix Matrix::select_columns(const std::vector<std::uint32_t>& keep) const {
  std::vector<std::int64_t> new_index(cols_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_index.at(keep[i]) = static_cast<std::int64_t>(i);
  Matrix m(rows_, keep.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVector v;
    for (const auto& [c, x] : data_[r])
      if (new_index[c] >= 0) v.emplace_back(static_cast<std::uint32_t>(new_index[c]), x);
    canonicalize(v);
    m.data_[r] = std::move(v);
  }
  return m;
}

Matrix Matrix::reduce_to(const Field& target) const {
  if (target == field_) return *this;
  if (!field_.is_rational()) throw MalformedInput("can only reduce rational matrices to a prime field");
  Matrix m(rows_, cols_, target);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVector v;
    for (const auto& [c, x] : data_[r]) {
      auto y = FieldElement::from_rational(x.rational(), target);
      if (!y.is_zero()) v.emplace_back(c, std::move(y));
    }
    m.data_[r] = std::move(v);
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw MalformedInput("matrix dimension mismatch in product");
  if (!(a.field_ == b.field_)) throw MalformedInput("matrix product across fields");
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    SparseVector acc;
    for (const auto& [k, x] : a.data_[r])
      for (const auto& [c, y] : b.data_[k]) acc.emplace_back(c, x * y);
    canonicalize(acc);
    out.data_[r] = std::move(acc);
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

}  // namespace syz
