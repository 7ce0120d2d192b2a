#pragma once

#include <vector>

#include "sympdec/bigint.hpp"
#include "sympdec/partition.hpp"

namespace sympdec {

/// Number-theoretic Möbius function by trial division. Throws
/// std::invalid_argument for n < 1.
int mobius(long n);

/// Positive divisors of n in increasing order.
std::vector<long> divisors(long n);

/// True when every factorization c = a·b with a even and μ(a) != 0 has b
/// even. Holds exactly when c is not 2 mod 4.
bool even_squarefree_cofactor_property(long c);

BigInt factorial(int n);

BigInt binomial(int n, int k);

/// Dimension of the degree-k piece of the free Lie algebra on n generators:
/// (1/k) Σ_{d|k} μ(d) n^{k/d}.
BigInt witt_dimension(long n, int k);

/// Conjugacy class of S_n with cycle type `cycle_type`.
struct ConjClass {
  Partition cycle_type;
  int n = 0;
  BigInt class_size;
  BigInt centralizer_order;  // z_μ = Π a^{m_a} m_a!
  int sign = 1;              // (-1)^(n - ℓ(μ))
};

/// Throws std::invalid_argument if |μ| != n.
ConjClass class_data(const Partition& mu, int n);

/// z_μ alone.
BigInt centralizer_order(const Partition& mu);

/// Sign of any permutation with cycle type μ.
int class_sign(const Partition& mu);

/// Dimension of the GL(N) irreducible with highest weight λ (hook-content
/// formula). Zero when ℓ(λ) > N.
BigInt gl_dimension(const Partition& lambda, long n_dim);

/// Degree f^λ of the S_n irreducible (hook-length formula).
BigInt sn_dimension(const Partition& lambda);

/// Every column has even length, i.e. every part of λ' is even.
bool has_even_columns(const Partition& lambda);

/// Kostka number K_{λ,weight}: semistandard tableaux of shape λ with content
/// `weight` (any composition; entries may be zero). Memoized, thread-safe.
BigInt kostka_number(const Partition& lambda, const std::vector<int>& weight);

/// Dominance order λ ⊵ μ. False when the sizes differ.
bool dominates(const Partition& lambda, const Partition& mu);

}  // namespace sympdec
