#pragma once

#include <map>
#include <string>

#include "sympdec/bigint.hpp"
#include "sympdec/decomposition.hpp"
#include "sympdec/partition.hpp"

namespace sympdec {

/// Stable Sp-labelled decomposition of a GL-decomposed module of degree k.
struct SpDecomposition {
  int degree = 0;
  std::map<Partition, BigInt, CanonicalOrder> terms;

  BigInt multiplicity(const Partition& label) const;
};

/// Stable Littlewood branching: mult_Sp(μ) = Σ_λ m_λ Σ_{β even columns} c^λ_{μβ}.
SpDecomposition stable_restrict(const Decomposition& dec, unsigned threads = 0);

/// Σ_{λ has even columns} m_λ over decompose_h(k): the invariant dimension
/// for all large genus. Zero for odd k.
BigInt stable_invariant_dim(int k, unsigned threads = 0);
BigInt stable_invariant_dim(const Decomposition& h);

/// m_{[(k+2)/2,(k+2)/2]} in decompose_h(k): the genus-one invariant
/// dimension. Throws std::invalid_argument for odd or non-positive k.
BigInt genus_one_invariant_dim(int k, unsigned threads = 0);
BigInt genus_one_invariant_dim(const Decomposition& h);

/// dim of Sp(2g)-invariants in the GL(2g) irreducible V_λ, from the
/// symmetric-pair rule: 1 if λ has even columns and ℓ(λ) <= 2g, else 0.
int spherical_invariant_count(const Partition& lambda, int genus);

/// The same number computed independently as the constant term of
/// s_λ(x_1^{±1},…,x_g^{±1}) · Π_{α>0} (1 - x^{-α}) over the C_g root system.
/// Intended for small λ and g (it enumerates all 2g-letter weights).
BigInt weyl_invariant_count(const Partition& lambda, int genus);

enum class InvariantMethod { Spherical, WeylConstantTerm };

/// Σ_λ m_λ r_g(λ) over decompose_h(k) with r_g from the chosen method.
BigInt unstable_invariant_dim(int k, int genus,
                              InvariantMethod method = InvariantMethod::Spherical,
                              unsigned threads = 0);
BigInt unstable_invariant_dim(const Decomposition& h, int genus,
                              InvariantMethod method = InvariantMethod::Spherical);

}  // namespace sympdec
