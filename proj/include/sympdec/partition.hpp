#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sympdec {

/// A Young diagram stored as its weakly decreasing list of positive row
/// lengths. Also used for cycle types of permutations. The empty partition is
/// the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// strictly positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts into decreasing order and drops zero entries. Negative entries
  /// are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  /// `count` copies of `part` (the rectangle / cycle type part^count).
  static Partition rectangle(int part, int count);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& part_vector() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Row length, or 0 past the last row.
  int operator[](std::size_t row) const {
    return row < parts_.size() ? parts_[row] : 0;
  }

  /// Number of parts equal to `value`.
  int multiplicity_of(int value) const;

  /// True if this diagram fits inside `outer` (this ⊆ outer cellwise).
  bool is_contained_in(const Partition& outer) const;

  /// "[3,1,1]"; the empty partition prints as "[]".
  std::string to_string() const;

  // Plain lexicographic comparison of the part lists.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical order used for every listing: decreasing lexicographic, so
/// [4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1] in this ordering.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return b < a;
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Every partition of n exactly once, in canonical (decreasing
/// lexicographic) order.
std::vector<Partition> enumerate_partitions(int n);

/// Partitions of n with at most `max_length` parts, canonical order.
std::vector<Partition> enumerate_partitions(int n, int max_length);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// Parses "6,2", "[6,2]", "2^2,1^4" or "[]"; whitespace is ignored. Parts may
/// be given in any order and are sorted. Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

}  // namespace sympdec

template <>
struct std::hash<sympdec::Partition> : sympdec::PartitionHash {};
