#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncposet {

/// Raised on malformed partitions, mismatched ground sets, or out-of-range
/// indices.
class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set partition of [n] = {1,...,n}.
///
/// Blocks are stored as bitmasks (bit i-1 set for element i), sorted by
/// their minimum element. Every constructor canonicalizes, so two partitions
/// are equal exactly when their block vectors are equal. A per-element block
/// index is kept alongside for constant-time `same_block`; it is derived from
/// the masks and never compared.
class SetPartition {
 public:
  using Mask = std::uint32_t;
  static constexpr int kMaxN = 16;

  SetPartition() = default;

  static SetPartition discrete(int n);
  static SetPartition full(int n);
  /// The atom a_{i,j}: unique non-singleton block {i,j}.
  static SetPartition atom(int n, int i, int j);
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static SetPartition from_masks(int n, std::span<const Mask> masks);
  /// Parses "1|23|4" or, with commas, "1,11|2,3". Commas are mandatory as
  /// soon as any element exceeds 9. The ground set size is the number of
  /// elements listed, and they must be exactly 1..n.
  static SetPartition parse(std::string_view text);

  int n() const { return n_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  int rank() const { return n_ - static_cast<int>(blocks_.size()); }
  std::span<const Mask> block_masks() const { return blocks_; }
  std::vector<std::vector<int>> blocks() const;

  /// Index (into block_masks) of the block holding element i.
  int block_index(int i) const;
  Mask block_of(int i) const { return blocks_[block_index(i)]; }
  bool same_block(int i, int j) const;
  /// True if {i} is a block.
  bool is_singleton(int i) const;
  /// True if `block` (a mask) is one of the blocks.
  bool has_block(Mask block) const;
  bool is_discrete() const { return static_cast<int>(blocks_.size()) == n_; }
  bool is_full() const { return blocks_.size() == 1; }

  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  SetPartition(int n, std::vector<Mask> blocks);
  void check_index(int i) const;

  int n_ = 0;
  std::vector<Mask> blocks_;
  std::array<std::uint8_t, kMaxN> block_id_{};
};

inline SetPartition::Mask element_bit(int i) { return SetPartition::Mask{1} << (i - 1); }

/// i ~_x j.
bool same_block(const SetPartition& x, int i, int j);

/// Dual refinement: every block of x lies inside a block of y.
bool leq_dref(const SetPartition& x, const SetPartition& y);

SetPartition meet_partition(const SetPartition& x, const SetPartition& y);
SetPartition join_partition(const SetPartition& x, const SetPartition& y);

/// Two disjoint blocks cross if a < b < c < d with a, c in one and b, d in
/// the other.
bool blocks_cross(SetPartition::Mask a, SetPartition::Mask b);
bool is_noncrossing(const SetPartition& x);

/// Smallest noncrossing partition weakly above x.
SetPartition nc_closure(const SetPartition& x);

/// Join in NC_n. Throws if either input is crossing.
SetPartition nc_join(const SetPartition& x, const SetPartition& y);

/// Meet in NC_n (the partition meet; checks both inputs are noncrossing).
SetPartition nc_meet(const SetPartition& x, const SetPartition& y);

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& x) const noexcept;
};

}  // namespace ncposet
