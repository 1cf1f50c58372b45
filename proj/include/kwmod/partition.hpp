#ifndef KWMOD_PARTITION_HPP
#define KWMOD_PARTITION_HPP

#include <string>
#include <utility>
#include <vector>

#include "kwmod/errors.hpp"

namespace kwmod {

enum class Parity { even, odd };

inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

/// Weakly decreasing sequence of positive integers. The empty partition is
/// legal (it is the Jordan type of the zero map on a zero-dimensional space).
struct Partition {
  std::vector<int> parts;
  int total = 0;

  int length() const { return static_cast<int>(parts.size()); }
  friend bool operator==(const Partition&, const Partition&) = default;
  std::string str() const;
};

/// Validates and builds a Partition; throws not_weakly_decreasing on
/// increasing adjacent pairs or non-positive parts.
Partition validate_partition(const std::vector<int>& parts);

/// Parses a comma-separated list such as "3,1". Empty string gives the
/// empty partition.
Partition parse_partition(const std::string& text);

/// The pair (r, q): Jordan type of a nilpotent even element, r acting on
/// the even part (total m) and q on the odd part (total n).
struct PartitionPair {
  Partition r;
  Partition q;

  int m() const { return r.total; }
  int n() const { return q.total; }
  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
  std::string str() const { return "(" + r.str() + " | " + q.str() + ")"; }
};

/// One row of the ordered combination of r and q: lengths weakly decreasing,
/// odd rows before even rows at equal length. Rows are listed bottom first.
struct MergedRow {
  int length;
  Parity parity;
  friend bool operator==(const MergedRow&, const MergedRow&) = default;
};

struct MergedShape {
  std::vector<MergedRow> rows;
  friend bool operator==(const MergedShape&, const MergedShape&) = default;
};

MergedShape merge_shapes(const Partition& r, const Partition& q);

/// Superdimension of the centralizer of the Jordan nilpotent of type (r,q)
/// in gl(m|n), computed combinatorially:
///   even = sum min(r_i, r_j) + sum min(q_i, q_j)
///   odd  = 2 * sum min(r_i, q_j)
/// Independent of the characteristic; serves as the oracle for the kernel
/// computations.
std::pair<int, int> centralizer_dims_formula(const PartitionPair& pp);

/// All partitions of k, longest-first lexicographically descending.
std::vector<Partition> all_partitions(int k);

/// All pairs (r ⊢ m, q ⊢ n), in the product order of all_partitions.
std::vector<PartitionPair> partition_pairs(int m, int n);

} // namespace kwmod

#endif
