#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncposet/partition.hpp"

namespace ncposet {

/// The atom a_{i,j} (i < j): unique non-singleton block {i, j}.
struct Atom {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

enum class Ambient { kNC, kPE };

const char* ambient_name(Ambient a);
Ambient parse_ambient(const std::string& name);

/// Caps for enumerating NBB bases of the top element.
inline constexpr int kMaxNbbN = 9;

/// Rank of an atom in the atom order: j if j < n, i if j = n. This is the
/// least r with a <= x_r on the distinguished chain, and atoms of different
/// ranks are compared by rank (atoms of equal rank are incomparable).
int atom_rank(Atom a, int n);

/// Atoms sorted by (rank, i, j).
bool atom_key_less(Atom a, Atom b, int n);

/// Atoms of the ambient lattice: all a_{i,j} for NC; for PE, all except
/// a_{1,n-1} and a_{n-1,n}.
std::vector<Atom> ambient_atoms(int n, Ambient ambient);
bool is_ambient_atom(Atom a, int n, Ambient ambient);

SetPartition atom_partition(Atom a, int n);

/// Join of a set of atoms in the ambient lattice (discrete partition for
/// the empty set).
SetPartition ambient_join(std::span<const Atom> atoms, int n, Ambient ambient);

/// Bounded below: every d in X has an ambient atom a of strictly smaller
/// rank with a < join(X). Throws PartitionError on atoms foreign to the
/// ambient lattice.
bool is_bb(std::span<const Atom> atoms, int n, Ambient ambient);
/// No nonempty subset is bounded below.
bool is_nbb(std::span<const Atom> atoms, int n, Ambient ambient);

using AtomSet = std::vector<Atom>;

/// NBB bases for the top element, each sorted by (rank, i, j) and the list
/// in lexicographic order of those keys. Backtracks with at most one atom per
/// rank, drops crossing pairs early, then runs the full NBB check.
std::vector<AtomSet> enumerate_nbb_bases_top(int n, Ambient ambient);

/// Same set by definition: every atom subset joining to the top, filtered by
/// the complete NBB test. Exponential in the number of atoms; n <= 7.
std::vector<AtomSet> enumerate_nbb_bases_top_bruteforce(int n, Ambient ambient);

/// NC-NBB bases for an arbitrary noncrossing x: at most one atom of each
/// rank, pairwise noncrossing, partition join equal to x. Exploratory; see
/// `enumerate_nbb_bases_nc_bruteforce` for the definitional version.
std::vector<AtomSet> enumerate_nbb_bases_nc_by_rank(const SetPartition& x);
std::vector<AtomSet> enumerate_nbb_bases_nc_bruteforce(const SetPartition& x);

/// Sum of (-1)^|X| over NBB bases X of the top element.
std::int64_t moebius_via_nbb(int n, Ambient ambient);

/// Graph on [n] with an edge {i, j} per atom a_{i,j}.
struct NcTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool is_tree() const;
  bool has_edge(int a, int b) const;
  std::vector<int> neighbours(int v) const;
  /// After deleting the edge {1, n}: the k such that the two components are
  /// [k] and {k+1..n}, or 0 if the components are not of that shape.
  int root_split() const;
  std::string to_dot(const std::string& name, const std::string& colour = "") const;
};

/// Throws PartitionError if the graph is not a tree.
NcTree base_to_tree(std::span<const Atom> base, int n);

enum class BaseKind { kKept, kS1, kS2, kR };
const char* base_kind_name(BaseKind k);

/// Membership of an NC-NBB base of the top element in the three removed
/// families. `kind` reports the family used for display: S2, then R, then
/// S1, otherwise kept.
struct BaseClass {
  bool in_s1 = false;
  bool in_s2 = false;
  bool in_r = false;
  BaseKind kind = BaseKind::kKept;
};

/// Throws std::logic_error when S1 is not inside R or S2 meets R.
BaseClass classify_base(std::span<const Atom> base, int n);

std::string atom_set_to_string(std::span<const Atom> atoms);

}  // namespace ncposet
