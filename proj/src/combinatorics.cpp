#include "sympdec/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "sympdec/errors.hpp"

namespace sympdec {

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius is defined for n >= 1");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors need n >= 1");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool even_squarefree_cofactor_property(long c) {
  for (long a : divisors(c))
    if (a % 2 == 0 && mobius(a) != 0 && (c / a) % 2 != 0) return false;
  return true;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt witt_dimension(long n, int k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("witt_dimension needs n >= 1 and k >= 1");
  BigInt total = 0;
  for (long d : divisors(k)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(k / d));
    total += mu * power;
  }
  if (total % k != 0) throw InternalError("Witt sum not divisible by k");
  return total / k;
}

BigInt centralizer_order(const Partition& mu) {
  BigInt z = 1;
  std::map<int, int> counts;
  for (int part : mu.parts()) ++counts[part];
  for (auto [part, count] : counts) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(count));
    z *= power * factorial(count);
  }
  return z;
}

int class_sign(const Partition& mu) {
  return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
}

ConjClass class_data(const Partition& mu, int n) {
  if (mu.size() != n)
    throw std::invalid_argument("cycle type " + mu.to_string() +
                                " is not a partition of " + std::to_string(n));
  ConjClass c;
  c.cycle_type = mu;
  c.n = n;
  c.centralizer_order = centralizer_order(mu);
  c.class_size = factorial(n) / c.centralizer_order;
  c.sign = class_sign(mu);
  return c;
}

namespace {

// Product of hook lengths of λ.
BigInt hook_product(const Partition& lambda) {
  Partition columns = conjugate(lambda);
  BigInt product = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      product *= (lambda[i] - j - 1) + (columns[j] - i - 1) + 1;
  return product;
}

}  // namespace

BigInt gl_dimension(const Partition& lambda, long n_dim) {
  if (n_dim < 1) throw std::invalid_argument("gl_dimension needs N >= 1");
  if (lambda.length() > n_dim) return 0;
  BigInt numerator = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) numerator *= n_dim + j - i;
  BigInt hooks = hook_product(lambda);
  if (numerator % hooks != 0) throw InternalError("hook-content division is not exact");
  return numerator / hooks;
}

BigInt sn_dimension(const Partition& lambda) {
  BigInt hooks = hook_product(lambda);
  BigInt n_fact = factorial(lambda.size());
  if (n_fact % hooks != 0) throw InternalError("hook-length division is not exact");
  return n_fact / hooks;
}

bool has_even_columns(const Partition& lambda) {
  const Partition columns = conjugate(lambda);
  for (int col : columns.parts())
    if (col % 2 != 0) return false;
  return true;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int a = 0, b = 0;
  for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
    a += lambda[static_cast<std::size_t>(i)];
    b += mu[static_cast<std::size_t>(i)];
    if (a < b) return false;
  }
  return true;
}

namespace {

struct KostkaKey {
  Partition shape;
  Partition weight;
  bool operator==(const KostkaKey&) const = default;
};

struct KostkaKeyHash {
  std::size_t operator()(const KostkaKey& k) const noexcept {
    return PartitionHash{}(k.shape) * 31u + PartitionHash{}(k.weight);
  }
};

class KostkaMemo {
 public:
  std::optional<BigInt> find(const KostkaKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(KostkaKey key, const BigInt& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<KostkaKey, BigInt, KostkaKeyHash> table_;
};

KostkaMemo& kostka_memo() {
  static KostkaMemo memo;
  return memo;
}

BigInt kostka_sorted(const Partition& shape, const Partition& weight);

// Removes a horizontal strip of `strip` cells from `shape`, one row at a
// time, and recurses on the remaining weight.
void strip_sum(const Partition& shape, std::vector<int>& inner, int row,
               int strip, const Partition& rest, BigInt& total) {
  if (row == shape.length()) {
    if (strip == 0) total += kostka_sorted(Partition::from_unsorted(inner), rest);
    return;
  }
  int lower = shape[static_cast<std::size_t>(row) + 1];
  int upper = shape[static_cast<std::size_t>(row)];
  for (int keep = upper; keep >= lower && upper - keep <= strip; --keep) {
    inner[static_cast<std::size_t>(row)] = keep;
    strip_sum(shape, inner, row + 1, strip - (upper - keep), rest, total);
  }
}

BigInt kostka_sorted(const Partition& shape, const Partition& weight) {
  if (shape.size() != weight.size()) return 0;
  if (weight.empty()) return 1;
  if (!dominates(shape, weight)) return 0;
  KostkaKey key{shape, weight};
  if (auto hit = kostka_memo().find(key)) return *hit;

  // The smallest part is placed as the largest entry.
  std::vector<int> rest_parts(weight.parts().begin(), weight.parts().end() - 1);
  Partition rest(rest_parts);
  std::vector<int> inner(static_cast<std::size_t>(shape.length()), 0);
  BigInt total = 0;
  strip_sum(shape, inner, 0, weight.parts().back(), rest, total);
  kostka_memo().insert(std::move(key), total);
  return total;
}

}  // namespace

BigInt kostka_number(const Partition& lambda, const std::vector<int>& weight) {
  // Kostka numbers are symmetric in the weight.
  return kostka_sorted(lambda, Partition::from_unsorted(weight));
}

}  // namespace sympdec
