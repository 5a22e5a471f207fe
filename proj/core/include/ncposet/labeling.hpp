#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncposet/builders.hpp"
#include "ncposet/poset.hpp"

namespace ncposet {

class LabelingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer labels on the cover relations of one poset. Labels are stored in
/// the order of `FinitePoset::upper_covers`.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  explicit EdgeLabeling(const FinitePoset& p);

  int label(std::size_t x, std::size_t y) const;
  int label_at(std::size_t x, std::size_t slot) const { return labels_[x][slot]; }
  void set(std::size_t x, std::size_t slot, int value) { labels_[x][slot] = value; }
  /// Label word of a saturated chain.
  std::vector<int> word(std::span<const std::size_t> chain) const;
  /// Restriction to `sub`, whose covers must all be covers of `host` with
  /// matching keys.
  EdgeLabeling restrict_to(const FinitePoset& host, const FinitePoset& sub) const;

 private:
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::vector<int>> labels_;
};

/// Strictly increasing.
bool is_rising(std::span<const int> word);
/// Weakly decreasing.
bool is_weakly_decreasing(std::span<const int> word);

/// lambda(y, z) = min{ i : (y v x_i) ^ z = z } over chain positions 0..r,
/// where `chain` is x_0 = bottom < ... < x_r = top. The equivalent form
/// min{ i : x_i ^ z not <= y } is evaluated as well and must agree.
/// Throws LabelingError if the chain is not a left-modular maximal chain.
EdgeLabeling left_modular_labeling(const FinitePoset& p, const LatticeOps& ops,
                                   std::span<const std::size_t> chain);

/// pi(x, y) = max{ j in B1 : j <= i for all i in B2 } where y merges the
/// blocks B1, B2 of x and min B1 < min B2.
int parking_label(const SetPartition& x, const SetPartition& y);
EdgeLabeling parking_labeling(const PartitionPoset& pp);

/// n minus the parking label; the customary labeling of NC_n.
EdgeLabeling standard_nc_labeling(const PartitionPoset& pp);

struct ElWitness {
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::string reason;
  std::vector<Chain> chains;
};

struct ElVerdict {
  bool el = false;
  std::uint64_t intervals_checked = 0;
  std::optional<ElWitness> witness;
};

/// Every interval [x, y] with x < y must have exactly one rising maximal
/// chain, whose label word is strictly lexicographically smaller than the
/// word of every other maximal chain of the interval.
ElVerdict verify_el(const FinitePoset& p, const EdgeLabeling& lab);

/// Every maximal chain of the (graded, rank r) poset carries r distinct
/// labels from [r].
bool verify_sn_el(const FinitePoset& p, const EdgeLabeling& lab);

/// Maximal chains with weakly decreasing label word.
std::uint64_t count_decreasing_chains(const FinitePoset& p, const EdgeLabeling& lab);

/// Rising saturated chains from x to y.
std::vector<Chain> rising_chains(const FinitePoset& p, const EdgeLabeling& lab, std::size_t x,
                                 std::size_t y);

}  // namespace ncposet
