#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncposet/bitset.hpp"

namespace ncposet {

using Chain = std::vector<std::size_t>;

class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The supplied relation is not a partial order. `witness` holds the
/// offending indices: (i, i, i) for reflexivity, (i, j, j) for antisymmetry,
/// (i, j, k) with i<=j<=k but not i<=k for transitivity.
class OrderViolation : public PosetError {
 public:
  OrderViolation(const std::string& what, std::array<std::size_t, 3> witness)
      : PosetError(what), witness(witness) {}
  std::array<std::size_t, 3> witness;
};

/// A finite poset with a dense comparability matrix and its Hasse diagram.
///
/// Elements are identified by index; keys are opaque labels used only for
/// export and lookup. Immutable once built.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Materializes the order given by `leq(i, j)` on indices. The relation is
  /// validated (reflexive, antisymmetric, transitive) and reduced to covers.
  static FinitePoset from_order_oracle(std::vector<std::string> keys,
                                       const std::function<bool(std::size_t, std::size_t)>& leq);
  /// Builds the reflexive-transitive closure of the given cover list. The
  /// list must be acyclic and already transitively reduced.
  static FinitePoset from_covers(std::vector<std::string> keys,
                                 std::span<const std::pair<std::size_t, std::size_t>> covers);

  std::size_t size() const { return keys_.size(); }
  const std::string& key(std::size_t i) const { return keys_[i]; }
  const std::vector<std::string>& keys() const { return keys_; }
  std::optional<std::size_t> index_of(const std::string& key) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && up_[i][j]; }
  const Bitset& up_set(std::size_t i) const { return up_[i]; }
  const Bitset& down_set(std::size_t i) const { return down_[i]; }

  /// Upper covers of i, ascending by index.
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }
  bool is_cover(std::size_t i, std::size_t j) const;
  std::size_t num_covers() const;
  /// All cover pairs sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

  std::optional<std::size_t> bottom() const { return bottom_; }
  std::optional<std::size_t> top() const { return top_; }
  bool is_bounded() const { return bottom_.has_value() && top_.has_value(); }

  /// Indices in an order compatible with <=, smallest first.
  const std::vector<std::size_t>& linear_extension() const { return linear_; }

  /// Induced subposet on `subset` (indices kept in the given order).
  FinitePoset induced(std::span<const std::size_t> subset) const;

 private:
  void finish_from_matrix();

  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::size_t> linear_;
  std::optional<std::size_t> bottom_;
  std::optional<std::size_t> top_;
};

/// Transitive reduction recomputed by the definition (x<y with no z strictly
/// between), independently of the construction path. Quadratic-times-size;
/// meant for checking small posets.
std::vector<std::pair<std::size_t, std::size_t>> naive_transitive_reduction(const FinitePoset& p);

/// Meet and join tables of a lattice, indexed by element indices.
class LatticeOps {
 public:
  LatticeOps(std::size_t n, std::vector<std::uint32_t> meet, std::vector<std::uint32_t> join)
      : n_(n), meet_(std::move(meet)), join_(std::move(join)) {}
  std::size_t size() const { return n_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
};

struct LatticeVerdict {
  bool is_lattice = false;
  std::optional<LatticeOps> ops;
  /// A pair lacking a unique join or meet when `is_lattice` is false.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
};

LatticeVerdict is_lattice(const FinitePoset& p);

/// All maximal bottom-to-top chains, lexicographic in element indices.
std::vector<Chain> maximal_chains(const FinitePoset& p);
/// Number of maximal chains, without materializing them.
std::uint64_t count_maximal_chains(const FinitePoset& p);
/// All saturated chains from x to y.
std::vector<Chain> saturated_chains(const FinitePoset& p, std::size_t x, std::size_t y);

struct GradedVerdict {
  bool graded = false;
  /// Length of any saturated chain from the bottom; only meaningful if graded.
  std::vector<int> rank;
  int height = 0;
};

GradedVerdict is_graded(const FinitePoset& p);

/// mu(x, y) for every ordered pair, zero off the order relation.
class MoebiusTable {
 public:
  MoebiusTable(std::size_t n, std::vector<std::int64_t> values) : n_(n), values_(std::move(values)) {}
  std::int64_t operator()(std::size_t x, std::size_t y) const { return values_[x * n_ + y]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> values_;
};

/// Full table by the recursion mu(x,y) = -sum_{x<z<=y} mu(z,y). Dense, so
/// intended for posets of a few thousand elements at most.
MoebiusTable moebius(const FinitePoset& p);
/// mu(z, y) for all z (zero unless z <= y).
std::vector<std::int64_t> moebius_to(const FinitePoset& p, std::size_t y);
std::int64_t moebius_value(const FinitePoset& p, std::size_t x, std::size_t y);
/// mu(bottom, top); throws on unbounded posets.
std::int64_t moebius_bottom_top(const FinitePoset& p);

/// x M z: (y v x) ^ z == y v (x ^ z) for every y <= z.
bool is_modular_pair(const FinitePoset& p, const LatticeOps& ops, std::size_t x, std::size_t z);
bool is_left_modular_element(const FinitePoset& p, const LatticeOps& ops, std::size_t x);
/// Throws PosetError unless `chain` is a maximal chain (bottom to top,
/// consecutive covers).
bool is_left_modular_chain(const FinitePoset& p, const LatticeOps& ops, std::span<const std::size_t> chain);
bool is_maximal_chain(const FinitePoset& p, std::span<const std::size_t> chain);

/// Componentwise order; element (i, j) gets index i * |q| + j.
FinitePoset direct_product(const FinitePoset& p, const FinitePoset& q);

/// Chain 0 < 1 < ... < length.
FinitePoset chain_poset(std::size_t length);

}  // namespace ncposet
