#pragma once

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "syzlab/field.hpp"

namespace syz {

/// Sparse vector: strictly increasing indices, no stored zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, FieldElement>>;

/// Sorts, merges duplicate indices by addition and drops zeros.
void canonicalize(SparseVector& v);

/// Sparse matrix stored by rows. Entries carry their own field so that
/// inconsistent input is detectable; every linear-algebra routine checks that
/// all entries belong to field().
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals());

  static Matrix identity(std::size_t n, Field field = Field::rationals());
  /// Dense convenience constructor for tests and small fixtures.
  static Matrix from_dense(const std::vector<std::vector<FieldElement>>& rows,
                           Field field = Field::rationals());
  /// Builds from (row, col, value) triplets; duplicates are summed.
  static Matrix from_triplets(std::size_t rows, std::size_t cols, Field field,
                              std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldElement>> entries);
  /// Columns given as sparse vectors of length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  std::size_t nnz() const;

  const SparseVector& row(std::size_t r) const { return data_[r]; }
  /// Replaces a row; the vector is canonicalized.
  void set_row(std::size_t r, SparseVector v);
  FieldElement at(std::size_t r, std::size_t c) const;

  Matrix transpose() const;
  std::vector<SparseVector> columns() const;
  Matrix select_columns(const std::vector<std::uint32_t>& keep) const;
  /// Same entries reinterpreted in another field (rationals reduced mod p).
  Matrix reduce_to(const Field& target) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<SparseVector> data_;
};

}  // namespace syz
