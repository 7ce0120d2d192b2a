#include "sympdec/sparse_matrix.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace sympdec::oracle {

SparseExactMatrix::SparseExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseExactMatrix SparseExactMatrix::identity(std::size_t n) {
  SparseExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.add(i, i, 1);
  return m;
}

std::size_t SparseExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseExactMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(row) + "," +
                            std::to_string(col) + ") outside " + std::to_string(rows_) +
                            "x" + std::to_string(cols_));
  if (value == 0) return;
  auto& r = data_[row];
  auto [it, inserted] = r.try_emplace(col, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) r.erase(it);
  }
}

Rational SparseExactMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = data_.at(row);
  auto it = r.find(col);
  return it == r.end() ? Rational(0) : it->second;
}

std::vector<SparseExactMatrix::Entry> SparseExactMatrix::entries() const {
  std::vector<Entry> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.push_back({r, c, v});
  return out;
}

namespace {

using IntVector = std::vector<std::pair<std::size_t, BigInt>>;

// Integer vectors spanning the same space as the rows (or, when there are
// more rows than columns, the columns) of m. Denominators are cleared per
// vector, which does not change the rank.
std::vector<IntVector> integer_vectors(const SparseExactMatrix& m) {
  const bool by_rows = m.rows() <= m.cols();
  std::vector<std::map<std::size_t, Rational>> transposed;
  if (!by_rows) {
    transposed.resize(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r)) transposed[c].emplace(r, v);
  }
  const std::size_t count = by_rows ? m.rows() : m.cols();
  std::vector<IntVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& source = by_rows ? m.row(i) : transposed[i];
    if (source.empty()) continue;
    BigInt denominator_lcm = 1;
    for (const auto& [c, v] : source) mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), v.get_den_mpz_t());
    IntVector vec;
    vec.reserve(source.size());
    for (const auto& [c, v] : source) vec.emplace_back(c, BigInt(v.get_num() * (denominator_lcm / v.get_den())));
    out.push_back(std::move(vec));
  }
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

using ModVector = std::vector<std::pair<std::size_t, std::uint64_t>>;

// row - factor * pivot, both sorted by column.
ModVector subtract_mod(const ModVector& row, const ModVector& pivot, std::uint64_t factor,
                       std::uint64_t p) {
  ModVector out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else {
      std::uint64_t sub = mul_mod(factor, pivot[j].second, p);
      std::uint64_t base = (i < row.size() && row[i].first == pivot[j].first) ? row[i++].second : 0;
      std::uint64_t v = base >= sub ? base - sub : base + (p - sub);
      if (v) out.emplace_back(pivot[j].first, v);
      ++j;
    }
  }
  return out;
}

// (a * row - b * pivot) / content, both sorted by column.
IntVector combine_exact(const IntVector& row, const BigInt& a, const IntVector& pivot,
                        const BigInt& b) {
  IntVector out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      BigInt v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i, ++j;
    }
  }
  BigInt content = 0;
  for (const auto& [c, v] : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1)
    for (auto& [c, v] : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

}  // namespace

std::size_t rank_mod_p(const SparseExactMatrix& m, std::uint64_t prime) {
  std::unordered_map<std::size_t, ModVector> pivots;
  for (const IntVector& vec : integer_vectors(m)) {
    ModVector row;
    row.reserve(vec.size());
    for (const auto& [c, v] : vec) {
      std::uint64_t r = mpz_fdiv_ui(v.get_mpz_t(), prime);
      if (r) row.emplace_back(c, r);
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        std::uint64_t inv = pow_mod(row.front().second, prime - 2, prime);
        for (auto& [c, v] : row) v = mul_mod(v, inv, prime);
        const std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = subtract_mod(row, it->second, row.front().second, prime);
    }
  }
  return pivots.size();
}

std::size_t rank_exact(const SparseExactMatrix& m) {
  std::unordered_map<std::size_t, IntVector> pivots;
  for (IntVector row : integer_vectors(m)) {
    row = combine_exact(row, 1, {}, 0);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const IntVector& pivot = it->second;
      BigInt g;
      mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
      BigInt a = pivot.front().second / g;
      BigInt b = row.front().second / g;
      row = combine_exact(row, a, pivot, b);
    }
  }
  return pivots.size();
}

RankResult certified_rank(const SparseExactMatrix& m) {
  const std::size_t bound = std::min(m.rows(), m.cols());
  const std::size_t modular = rank_mod_p(m);
  if (modular == bound) return {modular, "modular-full-rank"};
  return {rank_exact(m), "exact-elimination"};
}

std::size_t kernel_dimension(const SparseExactMatrix& m) {
  return m.cols() - certified_rank(m).rank;
}

}  // namespace sympdec::oracle
