#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ringnc {

/// Largest k accepted by enumerate_partitions.
inline constexpr unsigned kMaxEnumerateK = 64;
/// Largest k accepted by maximal_partitions and has_unique_maximal.
inline constexpr unsigned kMaxMaximalK = 40;

/// An integer partition, stored with non-increasing parts.
class Partition {
 public:
  /// Sorts the parts into non-increasing order.  Throws DomainError on an
  /// empty list or a zero part.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  unsigned total() const noexcept { return total_; }
  std::size_t length() const noexcept { return parts_.size(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  /// Lexicographic on parts; reverse-lexicographic order is descending.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<unsigned> parts_;
  unsigned total_ = 0;
};

/// `(7,6,4)`.
std::string to_string(const Partition& a);
/// Accepts `(4,6,7)` or `4,6,7` in any order.  Throws ParseError.
Partition parse_partition(std::string_view text);

/// All partitions of k in reverse-lexicographic order.  1 <= k <= 64.
std::vector<Partition> enumerate_partitions(unsigned k);

/// B divides A: every part of A is divisible by some part of B.
/// Throws DomainError when the totals differ.
bool divides(const Partition& b, const Partition& a);

/// A divides no partition of its total other than itself.  Only partitions
/// shorter than A are examined, via a minimum-part-count recurrence.
bool is_maximal(const Partition& a);

/// Reference implementation of is_maximal that scans every partition.
bool is_maximal_full_scan(const Partition& a);

/// Maximal partitions of k in reverse-lexicographic order.  1 <= k <= 40.
std::vector<Partition> maximal_partitions(unsigned k);

/// Whether (k - m, m) is maximal, i.e. m does not divide k.  Requires
/// 1 <= m <= k / 2.
bool is_len2_maximal(unsigned k, unsigned m);

/// maximal_partitions(k) == {(k)}.  1 <= k <= 40.
bool has_unique_maximal(unsigned k);

}  // namespace ringnc
