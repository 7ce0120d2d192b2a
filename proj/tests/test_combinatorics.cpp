#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "sympdec/combinatorics.hpp"

using namespace sympdec;

namespace {

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true, ++len;
    lengths.push_back(len);
  }
  return Partition::from_unsorted(lengths);
}

// Weyl dimension formula for GL(N): Π_{i<j} (λ_i - λ_j + j - i) / (j - i).
BigInt weyl_gl_dimension(const Partition& lambda, int n_dim) {
  if (lambda.length() > n_dim) return 0;
  Rational d = 1;
  for (int i = 0; i < n_dim; ++i)
    for (int j = i + 1; j < n_dim; ++j)
      d *= ratio(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i, j - i);
  return d.get_num();
}

// f^λ by the branching rule: remove one corner at a time.
BigInt branching_dimension(const Partition& lambda) {
  if (lambda.size() == 0) return 1;
  BigInt total = 0;
  std::vector<int> parts = lambda.part_vector();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
    std::vector<int> smaller = parts;
    if (--smaller[i] == 0) smaller.pop_back();
    total += branching_dimension(Partition(smaller));
  }
  return total;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(10) == 1);
  CHECK(mobius(20) == 0);
  CHECK(mobius(30) == -1);
  CHECK_THROWS_AS(mobius(0), std::invalid_argument);
  // Σ_{d|n} μ(d) = [n = 1].
  for (long n = 1; n <= 500; ++n) {
    long s = 0;
    for (long d : divisors(n)) s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(divisors(49) == std::vector<long>{1, 7, 49});
}

TEST_CASE("class data matches permutation counts") {
  CHECK(class_data(Partition{1, 1, 1}, 3).centralizer_order == 6);
  CHECK(class_data(Partition{1, 1, 1}, 3).class_size == 1);
  CHECK(class_data(Partition{2, 2}, 4).centralizer_order == 8);
  CHECK(class_data(Partition{2, 2}, 4).class_size == 3);
  CHECK(class_data(Partition{3, 1}, 4).centralizer_order == 3);
  CHECK(class_data(Partition{3, 1}, 4).class_size == 8);
  CHECK(class_data(Partition{3, 1}, 4).sign == 1);
  CHECK(class_data(Partition{2, 1}, 3).sign == -1);
  CHECK_THROWS_AS(class_data(Partition{2, 1}, 4), std::invalid_argument);

  for (int n = 1; n <= 7; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Partition, long> counts;
    do ++counts[cycle_type(perm)];
    while (std::next_permutation(perm.begin(), perm.end()));
    for (const Partition& mu : enumerate_partitions(n)) {
      const ConjClass c = class_data(mu, n);
      CHECK(c.class_size == counts[mu]);
      CHECK(c.class_size * c.centralizer_order == factorial(n));
      CHECK(c.sign == ((n - mu.length()) % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(18) == BigInt("6402373705728000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("witt dimension") {
  CHECK(witt_dimension(2, 3) == 2);
  CHECK(witt_dimension(2, 4) == 3);
  CHECK(witt_dimension(4, 7) == 2340);
  CHECK(witt_dimension(4, 4) == 60);
  CHECK(witt_dimension(4, 5) == 204);
  // Σ_{k|m} k·witt(n,k) = n^m (necklace identity).
  for (long n = 1; n <= 6; ++n)
    for (int m = 1; m <= 10; ++m) {
      BigInt s = 0;
      for (long k : divisors(m)) s += k * witt_dimension(n, static_cast<int>(k));
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
      CHECK(s == power);
    }
}

TEST_CASE("gl dimension") {
  CHECK(gl_dimension(Partition{2, 2}, 2) == 1);
  CHECK(gl_dimension(Partition{2, 2}, 4) == 20);
  CHECK(gl_dimension(Partition{1, 1, 1}, 2) == 0);
  CHECK(gl_dimension(Partition{3, 1, 1}, 4) == 36);
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      for (int N = 1; N <= 6; ++N) {
        CHECK(gl_dimension(lambda, N) == weyl_gl_dimension(lambda, N));
        CHECK((gl_dimension(lambda, N) > 0) == (lambda.length() <= N));
      }
}

TEST_CASE("sn dimension") {
  CHECK(sn_dimension(Partition{2, 2}) == 2);
  CHECK(sn_dimension(Partition{3, 2, 1}) == 16);
  for (int n = 0; n <= 10; ++n) {
    BigInt sum_squares = 0;
    for (const Partition& lambda : enumerate_partitions(n)) {
      CHECK(sn_dimension(lambda) == branching_dimension(lambda));
      sum_squares += sn_dimension(lambda) * sn_dimension(lambda);
    }
    CHECK(sum_squares == factorial(n));
  }
}

TEST_CASE("even columns") {
  CHECK(has_even_columns(Partition{2, 2}));
  CHECK_FALSE(has_even_columns(Partition{3, 1}));
  CHECK(has_even_columns(Partition()));
  CHECK(has_even_columns(Partition{4, 4, 1, 1}));
  CHECK_FALSE(has_even_columns(Partition{2, 2, 2}));
}

TEST_CASE("kostka numbers") {
  CHECK(kostka_number(Partition{2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka_number(Partition{3, 2}, {2, 2, 1}) == 2);
  CHECK(kostka_number(Partition{2, 2}, {3, 1}) == 0);
  // Σ_λ K_{λ,1^n} f^λ = n!, since K_{λ,1^n} = f^λ.
  for (int n = 1; n <= 8; ++n) {
    BigInt s = 0;
    for (const Partition& lambda : enumerate_partitions(n))
      s += kostka_number(lambda, std::vector<int>(static_cast<std::size_t>(n), 1)) * sn_dimension(lambda);
    CHECK(s == factorial(n));
  }
  // Kostka numbers do not depend on the order of the weight.
  CHECK(kostka_number(Partition{3, 2, 1}, {1, 2, 3}) == kostka_number(Partition{3, 2, 1}, {3, 2, 1}));
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
  CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominates(Partition{3}, Partition{2, 2}));
}

TEST_CASE("even squarefree cofactor property") {
  for (long c = 1; c <= 10000; ++c) CHECK(even_squarefree_cofactor_property(c) == (c % 4 != 2));
}

}  // TEST_SUITE
