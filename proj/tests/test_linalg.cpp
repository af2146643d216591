#include "support.hpp"

#include <gtest/gtest.h>

using namespace fwsa;
using fwsa::testing::dense_rank;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, unsigned conductor, int density) {
  std::uniform_int_distribution<int> coin(0, 99), val(-3, 3), k(0, static_cast<int>(conductor) - 1);
  std::vector<std::vector<Cyclotomic>> d(r, std::vector<Cyclotomic>(c, Cyclotomic(0)));
  for (auto& row : d) {
    for (auto& x : row) {
      if (coin(rng) < density) x = Cyclotomic(val(rng)) * Cyclotomic::root_of_unity(conductor, k(rng));
    }
  }
  return Matrix::from_dense(d);
}

}  // namespace

TEST(SparseMatrix, DenseRoundTripAndProducts) {
  const auto a = Matrix::from_dense({{1, 2, 0}, {0, 1, 3}});
  const auto b = Matrix::from_dense({{1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a.nonzeros(), 4u);
  EXPECT_EQ(Matrix::from_dense(a.to_dense()), a);
  EXPECT_EQ(a * b, Matrix::from_dense({{1, 2}, {3, 4}}));
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(a + a, a.scaled_by(Cyclotomic(2)));
  EXPECT_TRUE((a - a).is_zero_matrix());
  EXPECT_THROW(a * a, std::invalid_argument);
}

TEST(SparseMatrix, KronAndStack) {
  const auto a = Matrix::from_dense({{1, 2}, {3, 4}});
  const auto i = Matrix::identity(2);
  const auto k = kron(a, i);
  EXPECT_EQ(k.at(1, 3), Cyclotomic(2));
  EXPECT_EQ(k.at(2, 0), Cyclotomic(3));
  EXPECT_EQ(kron(a, i) * kron(i, a), kron(a, a));
  const auto s = vstack(a, i);
  EXPECT_EQ(s.rows(), 4u);
  EXPECT_EQ(s.at(3, 1), Cyclotomic(1));
}

TEST(Echelon, RankMatchesDenseEliminationOracle) {
  std::mt19937_64 rng(20261018);
  for (unsigned conductor : {1u, 3u, 4u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
      Matrix m = random_matrix(r, c, rng, conductor, 30 + trial);
      if (trial % 4 == 0 && c > 2) {
        // force a dependency
        m.set_column(c - 1, axpy(m.column(0), Cyclotomic(-2), m.column(1)));
      }
      EXPECT_EQ(rank(m), dense_rank(m)) << "conductor " << conductor << " trial " << trial;
      EXPECT_EQ(rank(m), rank(m.transpose()));
      EXPECT_EQ(column_space(m).rank, rank(m));
    }
  }
}

TEST(Echelon, TrackedCoordinatesReconstruct) {
  std::mt19937_64 rng(7);
  const Matrix m = random_matrix(6, 8, rng, 3, 50);
  EchelonBasis<Cyclotomic> eb(6, true);
  for (std::size_t j = 0; j < m.cols(); ++j) eb.add(m.column(j));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto c = eb.coordinates(m.column(j));
    ASSERT_TRUE(c.has_value());
    Vector sum;
    for (const auto& [g, x] : *c) sum = axpy(sum, x, m.column(g));
    EXPECT_EQ(Matrix::from_columns(6, {sum}), Matrix::from_columns(6, {m.column(j)}));
  }
  EchelonBasis<Cyclotomic> small(3, true);
  small.add(unit_vector<Cyclotomic>(0));
  EXPECT_FALSE(small.coordinates(unit_vector<Cyclotomic>(2)).has_value());
  EXPECT_THROW(EchelonBasis<Cyclotomic>(3).coordinates({}), std::logic_error);
}

TEST(Quotient, CokernelDimensionAndProjection) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(7, 3 + trial % 4, rng, 1, 40);
    const auto q = cokernel(m);
    EXPECT_EQ(q.dim(), 7 - dense_rank(m));
    const Matrix p = q.projection_matrix();
    EXPECT_TRUE((p * m).is_zero_matrix());
    EXPECT_EQ(dense_rank(p), q.dim());
    for (std::uint32_t k = 0; k < q.dim(); ++k) {
      EXPECT_EQ(q.project(q.lift(k)), unit_vector<Cyclotomic>(k));
    }
  }
}

TEST(Quotient, RationalField) {
  SparseMatrix<Rational> m = SparseMatrix<Rational>::from_dense({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(cokernel(m).dim(), 1u);
}
