#include "sympdec/littlewood_richardson.hpp"

#include <utility>
#include <vector>

#include "sympdec/memo.hpp"

namespace sympdec {
namespace {

struct Cell {
  int row;
  int col;
};

// Backtracking enumeration of LR tableaux on λ/μ. Cells are filled in
// reverse reading order (rows top to bottom, each row right to left), which
// is exactly the order in which the lattice condition is checked.
class LrFiller {
 public:
  LrFiller(const Partition& lambda, const Partition& mu, const Partition* content)
      : lambda_(lambda), mu_(mu), content_(content) {
    grid_.resize(static_cast<std::size_t>(lambda.length()));
    for (int r = 0; r < lambda.length(); ++r) {
      grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
      for (int c = lambda[static_cast<std::size_t>(r)] - 1; c >= mu[static_cast<std::size_t>(r)]; --c)
        cells_.push_back({r, c});
    }
    counts_.assign(static_cast<std::size_t>(lambda.size()) + 2, 0);
  }

  // Fixed-content mode: number of tableaux.
  BigInt count() {
    BigInt total = 0;
    run(0, [&] { total += 1; });
    return total;
  }

  // Free mode: tableaux grouped by content.
  std::map<Partition, BigInt, CanonicalOrder> expansion() {
    std::map<Partition, BigInt, CanonicalOrder> out;
    run(0, [&] {
      std::vector<int> parts;
      for (std::size_t v = 1; v < counts_.size() && counts_[v] > 0; ++v)
        parts.push_back(counts_[v]);
      out[Partition(parts)] += 1;
    });
    return out;
  }

 private:
  int& at(int r, int c) { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  template <typename Visit>
  void run(std::size_t index, Visit&& visit) {
    if (index == cells_.size()) {
      visit();
      return;
    }
    const auto [r, c] = cells_[index];
    int hi = max_label_ + 1;
    if (c + 1 < lambda_[static_cast<std::size_t>(r)]) hi = std::min(hi, at(r, c + 1));
    int lo = 1;
    if (r > 0 && c >= mu_[static_cast<std::size_t>(r) - 1]) lo = at(r - 1, c) + 1;
    if (content_) hi = std::min(hi, content_->length());
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (v > 1 && counts_[vi] + 1 > counts_[vi - 1]) continue;
      if (content_ && counts_[vi] + 1 > (*content_)[vi - 1]) continue;
      ++counts_[vi];
      at(r, c) = v;
      const int saved_max = max_label_;
      max_label_ = std::max(max_label_, v);
      run(index + 1, visit);
      max_label_ = saved_max;
      --counts_[vi];
    }
    at(r, c) = 0;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition* content_;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> cells_;
  std::vector<int> counts_;
  int max_label_ = 0;
};

struct TripleKey {
  Partition lambda, mu, nu;
  bool operator==(const TripleKey&) const = default;
};
struct TripleHash {
  std::size_t operator()(const TripleKey& k) const noexcept {
    PartitionHash h;
    return (h(k.lambda) * 1000003u ^ h(k.mu)) * 998244353u ^ h(k.nu);
  }
};
struct PairKey {
  Partition lambda, mu;
  bool operator==(const PairKey&) const = default;
};
struct PairHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    PartitionHash h;
    return h(k.lambda) * 1000003u ^ h(k.mu);
  }
};

using Expansion = std::map<Partition, BigInt, CanonicalOrder>;

ConcurrentMemo<TripleKey, BigInt, TripleHash>& coefficient_memo() {
  static ConcurrentMemo<TripleKey, BigInt, TripleHash> memo;
  return memo;
}

ConcurrentMemo<PairKey, Expansion, PairHash>& expansion_memo() {
  static ConcurrentMemo<PairKey, Expansion, PairHash> memo;
  return memo;
}

}  // namespace

BigInt lr_coefficient(const Partition& lambda, const Partition& mu,
                      const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!mu.is_contained_in(lambda) || !nu.is_contained_in(lambda)) return 0;
  TripleKey key{lambda, mu, nu};
  if (auto hit = coefficient_memo().find(key)) return *hit;
  BigInt value = LrFiller(lambda, mu, &nu).count();
  coefficient_memo().insert(std::move(key), value);
  return value;
}

std::map<Partition, BigInt, CanonicalOrder> lr_skew_expansion(
    const Partition& lambda, const Partition& mu) {
  if (!mu.is_contained_in(lambda)) return {};
  PairKey key{lambda, mu};
  if (auto hit = expansion_memo().find(key)) return *hit;
  Expansion value = LrFiller(lambda, mu, nullptr).expansion();
  expansion_memo().insert(std::move(key), value);
  return value;
}

}  // namespace sympdec
