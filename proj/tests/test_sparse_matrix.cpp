#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sympdec/sparse_matrix.hpp"

using namespace sympdec;
using namespace sympdec::oracle;

namespace {

// Dense Gaussian elimination over Q, kept deliberately naive.
std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("sparse_matrix") {

TEST_CASE("storage") {
  SparseExactMatrix m(2, 3);
  m.add(0, 1, 2);
  m.add(0, 1, -2);
  CHECK(m.nonzeros() == 0);
  m.add(1, 2, ratio(1, 3));
  CHECK(m.at(1, 2) == ratio(1, 3));
  CHECK(m.at(0, 0) == 0);
  CHECK_THROWS_AS(m.add(2, 0, 1), std::out_of_range);
  CHECK(SparseExactMatrix::identity(4).nonzeros() == 4);
  CHECK(certified_rank(SparseExactMatrix::identity(5)).rank == 5);
  CHECK(kernel_dimension(SparseExactMatrix(3, 4)) == 4);
}

TEST_CASE("ranks agree with dense elimination") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    const std::size_t planted = 1 + rng() % std::min(rows, cols);
    // Product of rows×planted and planted×cols integer matrices: rank <= planted.
    std::vector<std::vector<long>> left(rows, std::vector<long>(planted)), right(planted, std::vector<long>(cols));
    for (auto& r : left)
      for (auto& v : r) v = static_cast<long>(rng() % 7) - 3;
    for (auto& r : right)
      for (auto& v : r) v = static_cast<long>(rng() % 7) - 3;
    SparseExactMatrix m(rows, cols);
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        long v = 0;
        for (std::size_t t = 0; t < planted; ++t) v += left[i][t] * right[t][j];
        const Rational q = ratio(v, 1 + static_cast<long>(rng() % 3));
        dense[i][j] = q;
        m.add(i, j, q);
      }
    const std::size_t expected = dense_rank(dense);
    CHECK(rank_exact(m) == expected);
    CHECK(rank_mod_p(m) == expected);
    const RankResult r = certified_rank(m);
    CHECK(r.rank == expected);
    CHECK(r.certificate == (expected == std::min(rows, cols) ? "modular-full-rank" : "exact-elimination"));
    CHECK(kernel_dimension(m) == cols - expected);
  }
}

TEST_CASE("modular rank can drop below the true rank for a small prime") {
  SparseExactMatrix m(2, 2);
  m.add(0, 0, 1);
  m.add(0, 1, 2);
  m.add(1, 0, 3);
  m.add(1, 1, 1);  // det = -5
  CHECK(rank_mod_p(m, 5) == 1);
  CHECK(rank_exact(m) == 2);
  CHECK(certified_rank(m).rank == 2);
}

TEST_CASE("large entries stay exact") {
  SparseExactMatrix m(2, 2);
  const BigInt big("123456789012345678901234567890");
  m.add(0, 0, big);
  m.add(0, 1, big + 1);
  m.add(1, 0, big * 2);
  m.add(1, 1, big * 2 + 2);
  CHECK(rank_exact(m) == 1);
  CHECK(certified_rank(m).rank == 1);
}

}  // TEST_SUITE
