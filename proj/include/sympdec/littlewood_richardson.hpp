#pragma once

#include <map>

#include "sympdec/bigint.hpp"
#include "sympdec/partition.hpp"

namespace sympdec {

/// c^λ_{μν}: the number of LR tableaux of skew shape λ/μ and content ν
/// (semistandard fillings whose reverse reading word is a lattice word).
/// Zero unless |μ| + |ν| = |λ| and μ, ν ⊆ λ. Cached, thread-safe.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu,
                      const Partition& nu);

/// Every ν with c^λ_{μν} != 0, with its coefficient, from a single
/// enumeration of LR tableaux of shape λ/μ. Empty when μ ⊄ λ.
std::map<Partition, BigInt, CanonicalOrder> lr_skew_expansion(
    const Partition& lambda, const Partition& mu);

}  // namespace sympdec
