#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sympdec/bigint.hpp"

namespace sympdec::oracle {

/// Sparse matrix over Q. Zero entries are never stored.
class SparseExactMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
  };

  SparseExactMatrix(std::size_t rows, std::size_t cols);

  static SparseExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  /// Adds `value` to entry (row, col); an entry that cancels to zero is
  /// removed. Throws std::out_of_range on a bad index.
  void add(std::size_t row, std::size_t col, const Rational& value);

  Rational at(std::size_t row, std::size_t col) const;

  /// Entries sorted by (row, col).
  std::vector<Entry> entries() const;

  const std::map<std::size_t, Rational>& row(std::size_t r) const { return data_[r]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::map<std::size_t, Rational>> data_;
};

struct RankResult {
  std::size_t rank = 0;
  /// "modular-full-rank" when a prime-field rank already equals
  /// min(rows, cols) (the rational rank can only be larger, so it is exact),
  /// otherwise "exact-elimination".
  std::string certificate;
};

constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

/// Rank over Z/p after clearing denominators row by row. A lower bound for
/// the rational rank.
std::size_t rank_mod_p(const SparseExactMatrix& m, std::uint64_t prime = kDefaultPrime);

/// Rank over Q by fraction-free elimination on primitive integer rows.
std::size_t rank_exact(const SparseExactMatrix& m);

/// Modular pre-pass, then exact elimination unless the pre-pass is already
/// conclusive.
RankResult certified_rank(const SparseExactMatrix& m);

/// cols - rank.
std::size_t kernel_dimension(const SparseExactMatrix& m);

}  // namespace sympdec::oracle
