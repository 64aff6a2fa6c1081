#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "syzlab/field.hpp"
#include "syzlab/matrix.hpp"

namespace syz {

/// Rank over the matrix field. Throws MalformedInput on mixed-field entries.
std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}, one per free column of the reduced
/// row echelon form (value 1 at its free column, 0 at the other free columns).
Matrix kernel_basis(const Matrix& m);

/// rows(m) - rank(m).
std::size_t cokernel_dim(const Matrix& m);

/// Incrementally grown subspace of F^dim with exact membership tests.
class Subspace {
 public:
  Subspace(std::size_t dim, Field field);
  ~Subspace();
  Subspace(Subspace&&) noexcept;
  Subspace& operator=(Subspace&&) noexcept;

  std::size_t dim() const;
  std::size_t rank() const;
  const Field& field() const { return field_; }

  /// Adds v; returns true when v was not already in the span.
  bool add(const SparseVector& v);
  /// Canonical remainder of v modulo the span (zero on pivot columns).
  SparseVector reduce(const SparseVector& v);
  bool contains(const SparseVector& v) { return reduce(v).empty(); }

  /// Pivot columns of the echelon basis, ascending.
  std::vector<std::uint32_t> pivot_columns() const;
  /// Reduced row echelon basis, ordered by pivot column. After this call the
  /// coordinates of any member v are its entries at pivot_columns().
  std::vector<SparseVector> reduced_basis();

 private:
  struct Impl;
  Field field_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace syz
