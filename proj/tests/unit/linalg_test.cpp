#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "cubicsym/linalg/echelon.hpp"

using namespace cubicsym;

namespace {

Cyclotomic z(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int rank_cap) {
  // product of random rows x rank_cap and rank_cap x cols factors
  std::uniform_int_distribution<int> d(-2, 2);
  std::uniform_int_distribution<int> e(0, 2);
  Matrix left(rows, rank_cap), right(rank_cap, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (int k = 0; k < rank_cap; ++k) left(i, k) = d(rng) * z(3, e(rng));
  for (int k = 0; k < rank_cap; ++k)
    for (std::size_t j = 0; j < cols; ++j) right(k, j) = d(rng) + d(rng) * z(4, 1);
  return left * right;
}

}  // namespace

TEST(Rref, Examples) {
  EXPECT_EQ(rref(Matrix::identity(5)).rank, 5u);
  EXPECT_EQ(rref(Matrix(4, 6)).rank, 0u);
  const Matrix m{{1, z(3, 1)}, {z(3, 2), 1}};
  const EchelonForm e = rref(m);
  EXPECT_EQ(e.rank, 1u);
  EXPECT_EQ(e.pivot_columns, std::vector<std::size_t>{0});
  EXPECT_EQ(e.echelon(0, 1), z(3, 1));
  EXPECT_TRUE(e.echelon(1, 1).is_zero());
}

TEST(Nullspace, Examples) {
  EXPECT_TRUE(nullspace(Matrix::identity(4)).empty());
  EXPECT_EQ(nullspace(Matrix(3, 3)).size(), 3u);
  const Matrix ones{{1, 1, 1}};
  const auto basis = nullspace(ones);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& v : basis) EXPECT_TRUE((ones * std::span<const Cyclotomic>(v))[0].is_zero());
}

TEST(Commutant, Examples) {
  EXPECT_EQ(commutant_dimension({Matrix::identity(5)}), 25u);
  // Alt(4) images of (243) and (12)(34)
  const Matrix a{{z(3, 1), 0, 0, 0, 0},
                 {0, z(3, 2), 0, 0, 0},
                 {0, 0, 0, 0, 1},
                 {0, 0, 1, 0, 0},
                 {0, 0, 0, 1, 0}};
  const Matrix b = Matrix::diagonal({1, 1, 1, -1, -1});
  EXPECT_EQ(commutant_dimension({a, b}), 3u);
}

TEST(Commutant, MatchesCharacterNormOracle) {
  const Matrix g = Matrix::diagonal({z(3, 1), z(3, 1), 1, 1, 1});
  // oracle: <chi, chi> = (1/3) sum_j |trace(g^j)|^2 in floating point
  double norm = 0;
  for (int j = 0; j < 3; ++j) norm += std::norm(power(g, j).trace().to_complex());
  EXPECT_NEAR(norm / 3.0, 13.0, 1e-9);
  EXPECT_EQ(commutant_dimension({g}), 13u);
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(Matrix::diagonal({z(3, 1), 1, 1, 1, 1})), z(3, 1));
  const Matrix p{{0, 1}, {1, 0}};
  EXPECT_EQ(determinant(p), Cyclotomic(-1));
  const Matrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(inverse(m) * m, Matrix::identity(2));
}

TEST(Properties, RankOfTransposeAndIdempotence) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int cap = 1 + trial % 4;
    const Matrix m = random_matrix(rng, 5, 6, cap);
    const EchelonForm e = rref(m);
    EXPECT_EQ(e.rank, rank(m.transpose()));
    EXPECT_LE(e.rank, static_cast<std::size_t>(cap));
    EXPECT_EQ(rref(e.echelon).echelon, e.echelon);
    EXPECT_EQ(nullspace(m).size(), m.cols() - e.rank);
  }
}
