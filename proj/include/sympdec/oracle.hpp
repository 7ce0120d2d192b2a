#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sympdec/bigint.hpp"
#include "sympdec/decomposition.hpp"
#include "sympdec/lyndon.hpp"
#include "sympdec/sparse_matrix.hpp"

// Brute-force linear algebra on explicit free Lie / free associative
// algebra pieces. Nothing here calls the character pipeline.
namespace sympdec::oracle {

/// Caps on the size of explicit objects. Exceeding one raises
/// ResourceLimitError naming the cap.
struct OracleLimits {
  std::size_t max_basis_size = 300'000;     // words in one explicit basis
  std::size_t max_matrix_dimension = 60'000;  // rows or columns of one matrix
};

/// Lyndon basis of L(k) on 2g letters.
LyndonBasis build_lyndon_basis(int genus, int degree, const OracleLimits& limits = {});

/// Coordinates of a bracket expression in the basis (exact rationals,
/// indexed by basis position). Throws std::invalid_argument on a degree
/// mismatch or a letter outside the alphabet.
std::map<std::size_t, Rational> expand_bracket(const BracketExpr& expr, const LyndonBasis& basis);

/// Matrix of H ⊗ L(k+1) -> L(k+2), a ⊗ u ↦ [a, u]. Column index
/// x * |L(k+1)| + i for letter x and the i-th basis word of L(k+1); rows
/// follow the basis of L(k+2).
SparseExactMatrix bracket_map_matrix(int genus, int degree, const OracleLimits& limits = {});

/// Block of the bracket map in one multidegree (letter content of total
/// size k+2): columns x ⊗ u with u of content `content - e_x`.
SparseExactMatrix bracket_map_block(const std::vector<int>& content, LyndonReducer& reducer,
                                    const OracleLimits& limits = {});

/// dim h_{g,1}(k) from the kernel of the bracket map, block by block. Blocks
/// whose contents differ by a permutation of letters are isomorphic (via the
/// letter-permuting elements of GL(2g)), so only sorted contents are
/// eliminated, each weighted by its number of rearrangements.
BigInt bracket_kernel_dimension(int genus, int degree, const OracleLimits& limits = {});

/// Kernel dimension of the bracket map in multidegree ν padded to 2g
/// letters, for every ν ⊢ k+2 with at most 2g parts.
std::map<Partition, std::size_t, CanonicalOrder> h_weight_dimensions(
    int genus, int degree, const OracleLimits& limits = {});

/// GL(2g) decomposition of h_{g,1}(k) recovered from weight dimensions by
/// Kostka elimination (stable when 2g >= k+2).
Decomposition oracle_decompose_h(int genus, int degree, const OracleLimits& limits = {});

/// dim of sp(2g)-invariants of h_{g,1}(k): the zero-weight vectors of
/// H ⊗ L(k+1) killed by the bracket map and by the simple-root raising
/// operators of sp(2g), found by exact elimination on the stacked system.
BigInt sp_invariant_dimension(int genus, int degree, const OracleLimits& limits = {});

/// Same number from Sp weight multiplicities of h_{g,1}(k) via
/// m_0 = Σ_{w ∈ W(C_g)} ε(w) dim h[ρ - wρ].
BigInt sp_invariant_dimension_by_weights(int genus, int degree, const OracleLimits& limits = {});

/// GL(2g) decomposition of the degree-k symplectic derivations of the free
/// associative algebra without unit: the kernel of x ⊗ u ↦ xu - ux on
/// H ⊗ H^{⊗(k+1)}, from weight dimensions by Kostka elimination. Stable when
/// 2g >= k+2; with fewer letters only diagrams of at most 2g rows appear.
Decomposition assoc_decompose(int genus, int degree, const OracleLimits& limits = {});

/// Smallest genus with 2g >= k+2.
int stable_genus(int degree);

}  // namespace sympdec::oracle
