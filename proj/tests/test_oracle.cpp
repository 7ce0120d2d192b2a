#include <stdexcept>

#include "doctest.h"
#include "sympdec/characters.hpp"
#include "sympdec/combinatorics.hpp"
#include "sympdec/decomposition.hpp"
#include "sympdec/errors.hpp"
#include "sympdec/oracle.hpp"
#include "sympdec/sp_restriction.hpp"

using namespace sympdec;
using namespace sympdec::oracle;

TEST_SUITE("oracle") {

TEST_CASE("lyndon basis sizes") {
  for (int g = 1; g <= 2; ++g)
    for (int k = 1; k <= 6; ++k)
      CHECK(BigInt(static_cast<unsigned long>(build_lyndon_basis(g, k).size())) == witt_dimension(2 * g, k));
  OracleLimits tiny;
  tiny.max_basis_size = 10;
  CHECK_THROWS_AS(build_lyndon_basis(2, 4, tiny), ResourceLimitError);
}

TEST_CASE("expand bracket") {
  const LyndonBasis basis = build_lyndon_basis(1, 3);
  // [b,[a,b]] = -[[a,b],b]
  const auto coords = expand_bracket(
      BracketExpr::bracket(BracketExpr::letter(1), standard_bracketing(Word{char(0), char(1)})), basis);
  REQUIRE(coords.size() == 1);
  CHECK(basis.words[coords.begin()->first] == Word{char(0), char(1), char(1)});
  CHECK(coords.begin()->second == -1);
  CHECK_THROWS_AS(expand_bracket(BracketExpr::letter(0), basis), std::invalid_argument);
  CHECK_THROWS_AS(expand_bracket(BracketExpr::bracket(BracketExpr::letter(5), standard_bracketing(Word{char(0), char(1)})), basis),
                  std::invalid_argument);
}

TEST_CASE("full bracket map is surjective with the right kernel") {
  for (int g = 1; g <= 2; ++g)
    for (int k = 1; k <= 4; ++k) {
      const SparseExactMatrix m = bracket_map_matrix(g, k);
      CHECK(BigInt(static_cast<unsigned long>(m.rows())) == witt_dimension(2 * g, k + 2));
      CHECK(BigInt(static_cast<unsigned long>(m.cols())) == 2 * g * witt_dimension(2 * g, k + 1));
      CHECK(certified_rank(m).rank == m.rows());
      CHECK(BigInt(static_cast<unsigned long>(kernel_dimension(m))) == bracket_kernel_dimension(g, k));
    }
}

TEST_CASE("kernel dimensions match the character pipeline") {
  for (int g = 1; g <= 3; ++g)
    for (int k = 1; k <= (g == 3 ? 5 : 6); ++k)
      CHECK(bracket_kernel_dimension(g, k) == dimension_of(decompose_h(k), g));
}

TEST_CASE("weight spaces recover the decomposition") {
  for (int k = 1; k <= 4; ++k) CHECK(oracle_decompose_h(stable_genus(k), k).terms == decompose_h(k).terms);
  // Below the stable genus only diagrams of at most 2g rows survive.
  CHECK(oracle_decompose_h(1, 4).terms == restrict_to_genus(decompose_h(4), 1).terms);
}

TEST_CASE("sp invariants by two routes") {
  for (int k = 2; k <= 6; k += 2) CHECK(sp_invariant_dimension(1, k) == genus_one_invariant_dim(k));
  for (int k = 1; k <= 4; ++k)
    for (int g = 1; g <= 2; ++g) {
      const BigInt explicit_route = sp_invariant_dimension(g, k);
      CHECK(explicit_route == sp_invariant_dimension_by_weights(g, k));
      CHECK(explicit_route == unstable_invariant_dim(k, g));
    }
  CHECK(sp_invariant_dimension_by_weights(2, 6) == 4);
  CHECK(sp_invariant_dimension_by_weights(3, 6) == 5);
  CHECK(sp_invariant_dimension(1, 3) == 0);
}

TEST_CASE("associative analogue") {
  const Decomposition a1 = assoc_decompose(stable_genus(1), 1);
  CHECK(a1.terms.size() == 2);
  CHECK(a1.multiplicity(Partition{3}) == 1);
  CHECK(a1.multiplicity(Partition{1, 1, 1}) == 1);

  // The rotation-invariant tensors in degree 5 contain [3,1,1] twice.
  const Decomposition a3 = assoc_decompose(stable_genus(3), 3);
  CHECK(a3.terms.size() == 5);
  CHECK(a3.multiplicity(Partition{5}) == 1);
  CHECK(a3.multiplicity(Partition{3, 2}) == 1);
  CHECK(a3.multiplicity(Partition{3, 1, 1}) == 2);
  CHECK(a3.multiplicity(Partition{2, 2, 1}) == 1);
  CHECK(a3.multiplicity(Partition{1, 1, 1, 1, 1}) == 1);
  CHECK(check_conjugate_symmetry(a1).symmetric);
  CHECK(check_conjugate_symmetry(a3).symmetric);

  for (int k = 1; k <= 4; ++k)
    CHECK(assoc_decompose(stable_genus(k), k).terms ==
          decompose(cyclic_invariant_character(k + 2), Source::Assoc, k).terms);
}

TEST_CASE("stable genus") {
  CHECK(stable_genus(1) == 2);
  CHECK(stable_genus(2) == 2);
  CHECK(stable_genus(6) == 4);
}

}  // TEST_SUITE
