#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sympdec/bigint.hpp"
#include "sympdec/partition.hpp"

namespace sympdec {

/// Murnaghan–Nakayama evaluation with a process-wide memo table.
///
/// χ_λ(μ) is computed by stripping rim hooks of length μ_1 (the largest part
/// of μ) from λ. Hooks are found on the β-set (first-column hook lengths) of
/// λ: a rim hook of length a corresponds to moving one bead from b to b - a
/// onto an empty position, with sign (-1)^(number of beads jumped over).
/// The table is safe for concurrent readers and concurrent idempotent
/// insertion.
class CharacterTable {
 public:
  static CharacterTable& shared();

  /// Throws std::invalid_argument when |λ| != |μ|.
  BigInt value(const Partition& lambda, const Partition& mu);

  std::size_t memo_size() const;

 private:
  struct Key {
    Partition lambda;
    Partition mu;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  BigInt evaluate(const Partition& lambda, const Partition& mu);

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, BigInt, KeyHash> memo_;
};

/// χ_λ(μ) through the shared table.
BigInt mn_character(const Partition& lambda, const Partition& mu);

enum class ClassFunctionLabel { Lie, Induced, W, Irreducible, AdHoc };

std::string to_string(ClassFunctionLabel label);

/// Sparse integer-valued class function on S_n. Absent cycle types have
/// value zero; zero values are never stored.
class ClassFunction {
 public:
  using Values = std::map<Partition, BigInt, CanonicalOrder>;

  explicit ClassFunction(int degree,
                         ClassFunctionLabel label = ClassFunctionLabel::AdHoc)
      : degree_(degree), label_(label) {}

  int degree() const { return degree_; }
  ClassFunctionLabel label() const { return label_; }
  const std::optional<Partition>& irreducible() const { return irreducible_; }
  const Values& values() const { return values_; }

  /// Value on the class with cycle type μ (0 when absent).
  BigInt at(const Partition& mu) const;

  /// Sets (or erases, when zero) the value on cycle type μ. Throws
  /// std::invalid_argument if |μ| != degree.
  void set(const Partition& mu, const BigInt& value);

  std::size_t support_size() const { return values_.size(); }

  /// Pointwise difference; the label becomes AdHoc.
  ClassFunction operator-(const ClassFunction& other) const;

  /// Pointwise equality of values (labels are ignored).
  bool same_values(const ClassFunction& other) const {
    return degree_ == other.degree_ && values_ == other.values_;
  }

  /// Irreducible character χ_λ evaluated on every class (dense).
  static ClassFunction irreducible_character(const Partition& lambda);

 private:
  int degree_;
  ClassFunctionLabel label_;
  std::optional<Partition> irreducible_;
  Values values_;
};

/// Character of the S_k-module L_k whose Schur–Weyl pairing gives the
/// degree-k free Lie algebra: (b-1)! a^{b-1} μ(a) on the classes a^b with
/// ab = k (a = 1 gives the identity value (k-1)!), zero elsewhere.
ClassFunction chi_L(int k);

/// Character of Ind_{S_{k+1}}^{S_{k+2}} L_{k+1}: (k+2)·k! at the identity,
/// (b-1)! a^{b-1} μ(a) on 1^1 a^b with a >= 2 and ab = k+1, zero elsewhere.
ClassFunction chi_induced(int k);

/// Character of the S_{k+2}-module W_k: k! at the identity,
/// (b-1)! a^{b-1} μ(a) on 1^1 a^b (a >= 2, ab = k+1) and
/// -(b-1)! a^{b-1} μ(a) on a^b (a >= 2, ab = k+2).
ClassFunction chi_W(int k);

/// Character of Ind_{C_n}^{S_n} 1 for the cyclic group generated by an
/// n-cycle: z_μ φ(a) / n on the classes a^{n/a}, zero elsewhere. Pairs with
/// H^{⊗n} to give the rotation-invariant tensors.
ClassFunction cyclic_invariant_character(int n);

/// chi_W(k) == chi_induced(k) - chi_L(k+2) on every class of S_{k+2}.
bool verify_difference_identity(int k);

}  // namespace sympdec
