#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncposet/builders.hpp"
#include "ncposet/labeling.hpp"

namespace ncposet {

inline constexpr int kMaxChainN = 8;
inline constexpr int kMaxRestrictionN = 7;

/// |{t : w_t <= k}| >= k for every k. Non-positive entries give false.
bool is_parking_function(std::span<const int> word);

/// Parking labels along a maximal chain of `nc`. Throws LabelingError if the
/// chain is not maximal.
std::vector<int> chain_parking_word(const PartitionPoset& nc, std::span<const std::size_t> chain);

/// Maximal chains of NC_n together with the lattice they live in.
struct ChainSet {
  PartitionPoset nc;
  std::vector<Chain> chains;
};

/// Every maximal chain of NC_n, 3 <= n <= 8.
ChainSet build_C(int n);
/// Maximal chains of NC_n whose parking word avoids n-1, 3 <= n <= 8.
ChainSet build_D(int n);
/// |D_n| by dynamic programming over NC_n; nothing is stored.
std::uint64_t count_D(int n);

/// (PE_n, <=pchn): covers are those appearing on chains of D_n; the order is
/// their reflexive-transitive closure. Throws std::logic_error if the chain
/// elements do not form exactly PE_n. 3 <= n <= 8.
PartitionPoset build_pe_pchn(int n);
/// (PE_n, <=dref) with every cover of parking label n-1 deleted.
PartitionPoset build_pe_pchn_by_removal(int n);

struct RemovedCover {
  SetPartition x;
  SetPartition y;
  /// Replacement upper cover of x: its block of 1 merged with {n}.
  SetPartition y_prime;
  int label = 0;
  int label_prime = 0;
};

struct RestrictionVerdict {
  int n = 0;
  std::vector<RemovedCover> removed;
  /// Every removed cover has a replacement with smaller left-modular label
  /// equal to 1, parking label below n-1, and label(x, y) = min of the block
  /// of x containing n-1.
  bool witnesses_ok = false;
  /// Both constructions of (PE_n, <=pchn) agree.
  bool constructions_agree = false;
  ElVerdict el;
  std::uint64_t decreasing_chains = 0;
  std::string failure;
};

/// Checks the replacement covers and runs EL verification of the restricted
/// left-modular labeling on (PE_n, <=pchn). 3 <= n <= 7.
RestrictionVerdict verify_restriction_el(int n);

/// Left-modular labeling of (PE_n, <=dref) from the distinguished chain.
EdgeLabeling pe_dref_labeling(const PartitionPoset& pe);
/// Same for NC_n.
EdgeLabeling nc_labeling(const PartitionPoset& nc);

}  // namespace ncposet
