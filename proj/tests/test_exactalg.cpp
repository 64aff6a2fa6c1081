#include <random>

#include "doctest.h"
#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"

using namespace syz;

namespace {

Matrix dense(const std::vector<std::vector<long>>& rows, Field f = Field::rationals()) {
  std::vector<std::vector<FieldElement>> d;
  for (const auto& r : rows) {
    std::vector<FieldElement> row;
    for (long x : r) row.push_back(FieldElement::from_rational(mpq_class(x), f));
    d.push_back(row);
  }
  return Matrix::from_dense(d, f);
}

// Textbook dense elimination over Q; independent of the sparse engine.
std::size_t dense_rank_oracle(const Matrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, x] : m.row(r)) a[r][c] = x.rational();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density_pct,
                     std::size_t planted_rank = 0) {
  std::uniform_int_distribution<int> coin(0, 99), val(-9, 9), den(1, 4);
  auto entry = [&] { return FieldElement(mpq_class(val(rng), den(rng))); };
  if (planted_rank == 0) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldElement>> t;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (coin(rng) < density_pct) t.emplace_back(r, c, entry());
    return Matrix::from_triplets(rows, cols, Field::rationals(), t);
  }
  // product of rows x k and k x cols factors has rank <= k
  std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldElement>> a, b;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < planted_rank; ++k)
      if (coin(rng) < density_pct) a.emplace_back(r, k, entry());
  for (std::size_t k = 0; k < planted_rank; ++k)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) < density_pct) b.emplace_back(k, c, entry());
  return Matrix::from_triplets(rows, planted_rank, Field::rationals(), a) *
         Matrix::from_triplets(planted_rank, cols, Field::rationals(), b);
}

}  // namespace

TEST_CASE("field elements stay canonical") {
  FieldElement a(mpq_class(6, -4));
  CHECK(a.to_string() == "-3/2");
  auto p = Field::prime(7);
  auto r = FieldElement::from_rational(mpq_class(1, 3), p);
  CHECK(r.residue_value() == 5);
  CHECK((r * FieldElement::residue(3, 7)).is_one());
  CHECK_THROWS_AS(FieldElement::from_rational(mpq_class(1, 7), p), MalformedInput);
  CHECK_THROWS_AS(a + r, MalformedInput);
  CHECK_THROWS_AS(Field::prime(32001), MalformedInput);
  CHECK(Field::parse("Fp") == Field::prime(32003));
  CHECK(Field::parse("Q").label() == "Q");
  CHECK(FieldElement::parse("-7/21", Field::rationals()).to_string() == "-1/3");
}

TEST_CASE("rank: named cases") {
  CHECK(rank(Matrix(0, 0)) == 0);
  CHECK(rank(Matrix::identity(5)) == 5);
  CHECK(rank(dense({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(rank(dense({{1, 2, 3}, {2, 4, 6}}, Field::prime(32003))) == 1);
}

TEST_CASE("rank rejects mixed-field entries") {
  Matrix m = Matrix::from_triplets(2, 2, Field::rationals(),
                                   {{0, 0, FieldElement(1)}, {1, 1, FieldElement::residue(1, 32003)}});
  CHECK_THROWS_AS(rank(m), MalformedInput);
}

TEST_CASE("kernel_basis: named cases") {
  CHECK(kernel_basis(Matrix::identity(3)).cols() == 0);

  Matrix k = kernel_basis(Matrix(2, 2));
  CHECK(k.cols() == 2);
  CHECK(rank(k) == 2);

  Matrix k1 = kernel_basis(dense({{1, 1}}));
  REQUIRE(k1.cols() == 1);
  CHECK(k1.at(0, 0) == -k1.at(1, 0));
  CHECK(!k1.at(0, 0).is_zero());
}

TEST_CASE("cokernel_dim: named cases") {
  CHECK(cokernel_dim(Matrix::identity(4)) == 0);
  CHECK(cokernel_dim(Matrix(3, 5)) == 3);
}

TEST_CASE("rank agrees with a dense oracle and with the transpose") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 14, cols = 1 + rng() % 14;
    std::size_t planted = trial % 2 ? 1 + rng() % 6 : 0;
    Matrix m = random_matrix(rng, rows, cols, 35 + static_cast<int>(rng() % 50), planted);
    std::size_t r = rank(m);
    CHECK(r == dense_rank_oracle(m));
    CHECK(r == rank(m.transpose()));
  }
}

TEST_CASE("kernel columns are independent, annihilated, and complement the rank") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    Matrix m = random_matrix(rng, rows, cols, 50, trial % 3 ? 1 + rng() % 5 : 0);
    Matrix k = kernel_basis(m);
    CHECK(k.cols() + rank(m) == m.cols());
    CHECK(rank(k) == k.cols());
    Matrix prod = m * k;
    CHECK(prod.nnz() == 0);
  }
}

TEST_CASE("rank modulo 32003 never exceeds the rational rank") {
  std::mt19937_64 rng(2024);
  Field fp = Field::prime(32003);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 2 + rng() % 10, 2 + rng() % 10, 60, trial % 2 ? 2 + rng() % 4 : 0);
    CHECK(rank(m.reduce_to(fp)) <= rank(m));
  }
  // a rank drop that only happens modulo p
  Matrix m = dense({{1, 0}, {0, 32003}});
  CHECK(rank(m) == 2);
  CHECK(rank(m.reduce_to(fp)) == 1);
}

TEST_CASE("subspace reduction gives canonical remainders and RREF coordinates") {
  Subspace s(4, Field::rationals());
  CHECK(s.add({{0, FieldElement(1)}, {1, FieldElement(1)}}));
  CHECK(s.add({{1, FieldElement(1)}, {2, FieldElement(2)}}));
  CHECK_FALSE(s.add({{0, FieldElement(1)}, {2, FieldElement(-2)}}));
  CHECK(s.rank() == 2);
  auto rem = s.reduce({{0, FieldElement(3)}, {3, FieldElement(1)}});
  // 3 e0 + e3 = 3(e0 + e1) - 3(e1 + 2e2) + 6 e2 + e3
  REQUIRE(rem.size() == 2);
  CHECK(rem[0].first == 2);
  CHECK(rem[0].second == FieldElement(6));
  CHECK(rem[1].first == 3);
  auto basis = s.reduced_basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == SparseVector{{0, FieldElement(1)}, {2, FieldElement(-2)}});
  CHECK(s.pivot_columns() == std::vector<std::uint32_t>{0, 1});
}
