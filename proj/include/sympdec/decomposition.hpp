#pragma once

#include <map>
#include <string>
#include <vector>

#include "sympdec/bigint.hpp"
#include "sympdec/characters.hpp"
#include "sympdec/partition.hpp"

namespace sympdec {

enum class Source { H, Lie, Assoc };

std::string to_string(Source source);

/// Throws std::invalid_argument for anything but "h", "lie", "assoc".
Source parse_source(const std::string& name);

/// Irreducible decomposition: multiplicities of Young diagrams of one size.
/// Only positive multiplicities are stored.
struct Decomposition {
  using Terms = std::map<Partition, BigInt, CanonicalOrder>;

  Source source = Source::H;
  int degree = 0;  // the module degree k (h(k) lives on k+2 boxes)
  int boxes = 0;   // size of every partition in `terms`
  Terms terms;

  BigInt multiplicity(const Partition& lambda) const;

  /// Stores `m` (erasing on zero). Throws std::invalid_argument when the
  /// partition has the wrong size or m is negative.
  void set(const Partition& lambda, const BigInt& m);

  /// Σ m_λ f^λ, the dimension of the underlying S_n-module.
  BigInt sn_module_dimension() const;

  bool operator==(const Decomposition&) const = default;
};

/// m_λ = Σ_μ χ(μ) χ_λ(μ) / z_μ over the support of χ. Throws
/// std::invalid_argument on a degree mismatch and InternalError when the result
/// is negative or not an integer.
BigInt multiplicity(const Partition& lambda, const ClassFunction& chi);

/// Multiplicities of every λ ⊢ degree(χ) in the class function, computed in
/// parallel over λ.
Decomposition decompose(const ClassFunction& chi, Source source, int degree,
                        unsigned threads = 0);

/// Stable GL decomposition of h_{g,1}(k): diagrams with k+2 boxes.
Decomposition decompose_h(int k, unsigned threads = 0);

/// Decomposition of the free Lie algebra piece of degree k.
Decomposition decompose_lie(int k, unsigned threads = 0);

struct SymmetryViolation {
  Partition lambda;
  BigInt multiplicity;
  BigInt conjugate_multiplicity;
};

struct SymmetryReport {
  bool symmetric = true;
  /// One entry per unordered pair {λ, λ'} with m_λ != m_λ', listed with λ
  /// the canonically earlier of the two.
  std::vector<SymmetryViolation> violations;
};

SymmetryReport check_conjugate_symmetry(const Decomposition& dec);

/// True when conjugate symmetry is a theorem for (source, degree):
/// h with k ≡ 2,3 (mod 4); lie with k ≡ 0,1,3 (mod 4); assoc with k odd.
bool symmetry_guaranteed(Source source, int degree);

/// Σ m_λ dim_{GL(2g)} V_λ.
BigInt dimension_of(const Decomposition& dec, int genus);

/// The GL(2g) decomposition: drops diagrams with more than 2g rows.
Decomposition restrict_to_genus(const Decomposition& dec, int genus);

struct SeriesEntry {
  std::string series;  // "[2k,2]" or "[2^2,1^4m]"
  int degree = 0;
  Partition lambda;
  BigInt multiplicity;
  bool ok = false;
};

struct SeriesReport {
  bool ok = true;
  std::vector<SeriesEntry> entries;
};

/// Checks m_{[2j,2]} = 1 in h(2j) for 2j <= max_k and m_{[2,2,1^{4m}]} = 1 in
/// h(4m+2) for 4m+2 <= max_k. Throws std::invalid_argument when max_k < 2.
SeriesReport multiplicity_series_check(int max_k, unsigned threads = 0);

}  // namespace sympdec
