#pragma once

// Integer partitions, rank vectors over the six planes, and tuples of
// partitions indexed by framing slots — the fixed-point combinatorics.

#include <string>
#include <vector>

#include "origami/kchar.hpp"

namespace origami {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // weakly decreasing positive

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }                    // number of boxes
  int length() const { return (int)parts_.size(); }     // number of rows
  bool empty() const { return parts_.empty(); }
  int row(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based

  // 0-based box membership: (i,j) in lambda iff j < lambda_{i+1}.
  bool contains(int i, int j) const { return i >= 0 && j >= 0 && j < row(i); }

  Partition conjugate() const;
  int col(int j) const;  // conjugate part, 0-based

  // Hook length of (i,j): boxes (i,j') with j' >= j plus boxes (i',j) with
  // i' > i; 0 for (i,j) outside the partition.
  int hook(int i, int j) const;

  // Signed arm/leg of an arbitrary box (may be negative outside the shape):
  // arm = lambda_{i+1} - j - 1, leg = lambda'_{j+1} - i - 1.
  int arm_signed(int i, int j) const { return row(i) - j - 1; }
  int leg_signed(int i, int j) const { return col(j) - i - 1; }

  std::string str() const;                      // "(3,1,1)", "()" when empty
  static Partition parse(const std::string&);   // inverse of str()

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
const std::vector<Partition>& partitions_of(int n);

// ---------------------------------------------------------------------------

struct RankVector {
  std::array<int, 6> r{0, 0, 0, 0, 0, 0};

  int total() const;
  int at(int plane) const { return r.at(plane); }

  // True when every plane touching axis 4 has rank zero (the 3d sector).
  bool three_dim() const { return r[2] == 0 && r[4] == 0 && r[5] == 0; }

  // Slot keys (plane, alpha) in lexicographic order.
  std::vector<SlotKey> slot_keys() const;

  // "12=1,34=2" form; empty string for the zero vector.
  std::string str() const;
  // Parses the same form; throws std::invalid_argument on an unknown label,
  // a duplicate label (message names the position), or a negative rank.
  static RankVector parse(const std::string&);

  friend bool operator==(const RankVector&, const RankVector&) = default;
};

// ---------------------------------------------------------------------------

class PartitionTuple {
 public:
  PartitionTuple() = default;
  PartitionTuple(const RankVector& ranks, std::vector<Partition> by_slot);

  const RankVector& ranks() const { return ranks_; }
  const std::vector<SlotKey>& slots() const { return slots_; }
  const Partition& at(SlotKey k) const;
  const Partition& at_index(std::size_t i) const { return parts_[i]; }
  std::size_t slot_count() const { return slots_.size(); }

  int total_size() const;

  // "{12.1:(2), 34.1:(1,1)}"; empty slots omitted; "{}" for the empty tuple.
  std::string str() const;
  // Parses the same form against a rank vector; unmentioned slots are empty.
  static PartitionTuple parse(const std::string&, const RankVector&);

  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;

 private:
  RankVector ranks_;
  std::vector<SlotKey> slots_;     // lexicographic
  std::vector<Partition> parts_;   // aligned with slots_
};

// All tuples of total size n, deterministic order: slots lexicographic, sizes
// ascending per slot, partitions reverse-lexicographic within a size.
// Throws std::invalid_argument for n < 0.
std::vector<PartitionTuple> enumerate_tuples(const RankVector& ranks, int n);

// Number of tuples of total size n (product of partition generating
// functions), used as the counting oracle.
long long count_tuples(const RankVector& ranks, int n);

// ---------------------------------------------------------------------------

// Character of the slot's box sum: sum over (i,j) in lambda of
// t_a^i t_b^j w[A,alpha], where {a,b} are the axes of plane A.
Character k_char(const Partition& lambda, int plane, int alpha);

}  // namespace origami
