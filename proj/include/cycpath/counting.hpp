#pragma once

// Counting interval partitions of a cycle and decompositions I = S + T of
// its vertex set by the lengths of the maximal intervals of c:T.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cycpath/rational.hpp"

namespace cycpath {

/// Multiplicities j_1, j_2, ...: j_i is the number of intervals of length i.
struct LengthMultiset {
  std::vector<std::size_t> multiplicities;

  std::size_t count() const;   // sum of j_i
  std::size_t total() const;   // sum of i * j_i
  std::size_t at(std::size_t length) const;  // j_length, 0 when absent
  /// Builds the multiplicities from a list of lengths.
  static LengthMultiset from_lengths(const std::vector<std::size_t>& lengths);
  /// Drops trailing zero multiplicities.
  LengthMultiset normalized() const;

  friend bool operator==(const LengthMultiset& a, const LengthMultiset& b) {
    return a.normalized().multiplicities == b.normalized().multiplicities;
  }
};

/// n (k-1)! / (j_1! j_2! ...): the number of ways to cut an n-cycle into
/// k >= 2 intervals with the given length multiset. Throws InvalidMultiset
/// unless k >= 2 and the lengths add up to n.
Integer count_interval_partitions(std::size_t n, const LengthMultiset& lengths);

/// Number of S with |S| = k whose complement splits into maximal intervals
/// with the multiset `t_lengths`. Equal to n (k-1)! / (j_1! j_2! ...) with
/// j_{i+1} the number of complement intervals of length i and j_1 the
/// remaining k - sum of them. Throws InvalidMultiset unless k >= 1, there
/// are at most k complement intervals and k + sum of lengths = n.
Integer count_decompositions(std::size_t n, std::size_t k, const LengthMultiset& t_lengths);

/// An arc of the cycle 0, 1, ..., n-1 starting at `start`.
struct CyclicInterval {
  std::size_t start;
  std::size_t length;

  friend auto operator<=>(const CyclicInterval&, const CyclicInterval&) = default;
};

/// Right endpoints of the intervals (last element in the forward direction),
/// as a bitmask over 0..n-1.
std::uint64_t right_endpoints(std::size_t n, const std::vector<CyclicInterval>& partition);

/// Inverse of right_endpoints: each maximal interval of the complement of S
/// is extended by the next element of S; leftover elements of S become
/// intervals of length one. Intervals sorted by start. S must be nonempty.
std::vector<CyclicInterval> intervals_from_endpoints(std::size_t n, std::uint64_t s);

/// Maximal intervals of the complement of S on the n-cycle (S nonempty).
std::vector<CyclicInterval> complement_intervals(std::size_t n, std::uint64_t s);

}  // namespace cycpath
