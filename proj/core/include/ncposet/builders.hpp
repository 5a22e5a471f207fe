#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncposet/partition.hpp"
#include "ncposet/poset.hpp"

namespace ncposet {

/// Size caps for the full-poset builders.
inline constexpr int kMaxPiN = 9;
inline constexpr int kMaxNcN = 10;
inline constexpr int kMaxPeN = 10;

/// A poset whose elements are set partitions of [n]. Element i of `poset`
/// is `elements[i]`; elements are sorted by rank, so index order is a linear
/// extension.
struct PartitionPoset {
  int n = 0;
  std::vector<SetPartition> elements;
  FinitePoset poset;

  std::optional<std::size_t> find(const SetPartition& x) const;
  std::size_t index_of(const SetPartition& x) const;
  const SetPartition& operator[](std::size_t i) const { return elements[i]; }
  std::size_t size() const { return elements.size(); }

  /// Builds the poset from the element set ordered by leq_dref.
  static PartitionPoset from_dref(int n, std::vector<SetPartition> elements);
  /// Builds the poset generated by the given covers (pairs of indices into
  /// `elements`, which must already be rank-sorted).
  static PartitionPoset from_covers(int n, std::vector<SetPartition> elements,
                                    std::span<const std::pair<std::size_t, std::size_t>> covers);

 private:
  std::unordered_map<SetPartition, std::size_t, SetPartitionHash> lookup_;
  void index_elements();
};

/// All set partitions of [n] (restricted growth strings), rank-sorted.
std::vector<SetPartition> enumerate_partitions(int n);
/// All noncrossing partitions of [n], generated by splitting on the block
/// of the first element; rank-sorted.
std::vector<SetPartition> enumerate_noncrossing(int n);

/// Canonical ordering used by every builder: rank, then block masks.
void sort_partitions(std::vector<SetPartition>& xs);

PartitionPoset build_pi(int n);
PartitionPoset build_nc(int n);

/// Membership in PE_n: x noncrossing, not containing the block {n-1,n}, and not
/// having {n} as a singleton while 1 ~ n-1. Requires n >= 3.
bool is_pe_member(const SetPartition& x);
/// The two excluded families.
bool in_excluded_l1(const SetPartition& x);
bool in_excluded_l2(const SetPartition& x);

std::vector<SetPartition> enumerate_pe(int n);
PartitionPoset build_pe_dref(int n);

/// Meet and join of PE_n computed from the NC operations plus the repairs:
/// the meet splits a block {n-1,n}; the join merges a singleton {n} into the
/// block of 1. The two repair cases that cannot arise throw std::logic_error.
SetPartition pe_meet(const SetPartition& x, const SetPartition& y);
SetPartition pe_join(const SetPartition& x, const SetPartition& y);

/// Result of a PE operation together with whether the repair step fired.
struct PeOpResult {
  SetPartition value;
  bool repaired = false;
};
PeOpResult pe_meet_traced(const SetPartition& x, const SetPartition& y);
PeOpResult pe_join_traced(const SetPartition& x, const SetPartition& y);

/// x_1 < x_2 < ... < x_n where x_i has the unique non-singleton block
/// [i-1] + {n}; x_1 is the discrete partition, x_n the full one.
struct DistinguishedChain {
  int n = 0;
  std::vector<SetPartition> elements;

  /// Element indices of the chain inside `pp`; throws if one is missing.
  Chain indices_in(const PartitionPoset& pp) const;
};

DistinguishedChain distinguished_chain(int n);

/// Constructor keys accepted by the CLI: "pi", "nc", "pe-dref".
PartitionPoset build_by_kind(const std::string& kind, int n);

}  // namespace ncposet
