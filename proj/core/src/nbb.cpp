#include "ncposet/nbb.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ncposet/builders.hpp"

namespace ncposet {

namespace {

void check_n(int n, Ambient ambient, int max_n, const char* what) {
  const int lo = ambient == Ambient::kPE ? 3 : 1;
  if (n < lo || n > max_n) {
    throw std::out_of_range(std::string(what) + ": n=" + std::to_string(n) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(max_n) + "] for " +
                            ambient_name(ambient));
  }
}

bool atoms_cross(Atom a, Atom b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

bool atom_below(Atom a, const SetPartition& x) { return x.same_block(a.i, a.j); }

void sort_atoms(AtomSet& atoms, int n) {
  std::sort(atoms.begin(), atoms.end(), [n](Atom a, Atom b) { return atom_key_less(a, b, n); });
}

bool atom_set_less(const AtomSet& a, const AtomSet& b, int n) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [n](Atom x, Atom y) { return atom_key_less(x, y, n); });
}

// Least rank of an ambient atom strictly below j.
int min_rank_below(const SetPartition& join, const std::vector<Atom>& atoms, int n) {
  int best = n;  // larger than every rank
  for (Atom a : atoms) {
    if (atom_below(a, join) && !(join == atom_partition(a, n))) best = std::min(best, atom_rank(a, n));
  }
  return best;
}

// Least PE element above an NC element obtained by the join repair: an
// element with {n} singleton and 1 ~ n-1 gets n merged into the block of 1.
// Elements containing the block {n-1,n} have no such repair.
std::optional<SetPartition> pe_repair(const SetPartition& w) {
  if (in_excluded_l1(w)) return std::nullopt;
  if (!in_excluded_l2(w)) return w;
  const int n = w.n();
  std::vector<SetPartition::Mask> blocks;
  for (auto b : w.block_masks()) {
    if (b == w.block_of(1)) {
      blocks.push_back(b | element_bit(n));
    } else if (b != element_bit(n)) {
      blocks.push_back(b);
    }
  }
  return SetPartition::from_masks(n, blocks);
}

}  // namespace

const char* ambient_name(Ambient a) { return a == Ambient::kNC ? "nc" : "pe"; }

Ambient parse_ambient(const std::string& name) {
  if (name == "nc") return Ambient::kNC;
  if (name == "pe") return Ambient::kPE;
  throw std::invalid_argument("unknown ambient '" + name + "' (expected nc or pe)");
}

int atom_rank(Atom a, int n) { return a.j < n ? a.j : a.i; }

bool atom_key_less(Atom a, Atom b, int n) {
  const int ra = atom_rank(a, n), rb = atom_rank(b, n);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool is_ambient_atom(Atom a, int n, Ambient ambient) {
  if (a.i < 1 || a.j > n || a.i >= a.j) return false;
  if (ambient == Ambient::kPE) {
    if ((a.i == 1 && a.j == n - 1) || (a.i == n - 1 && a.j == n)) return false;
  }
  return true;
}

std::vector<Atom> ambient_atoms(int n, Ambient ambient) {
  std::vector<Atom> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (is_ambient_atom({i, j}, n, ambient)) out.push_back({i, j});
    }
  }
  sort_atoms(out, n);
  return out;
}

SetPartition atom_partition(Atom a, int n) { return SetPartition::atom(n, a.i, a.j); }

SetPartition ambient_join(std::span<const Atom> atoms, int n, Ambient ambient) {
  SetPartition acc = SetPartition::discrete(n);
  for (Atom a : atoms) {
    if (!is_ambient_atom(a, n, ambient)) {
      throw PartitionError("a_{" + std::to_string(a.i) + "," + std::to_string(a.j) +
                           "} is not an atom of " + ambient_name(ambient) + "_" + std::to_string(n));
    }
    acc = ambient == Ambient::kNC ? nc_join(acc, atom_partition(a, n)) : pe_join(acc, atom_partition(a, n));
  }
  return acc;
}

bool is_bb(std::span<const Atom> atoms, int n, Ambient ambient) {
  if (atoms.empty()) throw PartitionError("is_bb of the empty set");
  const SetPartition join = ambient_join(atoms, n, ambient);
  const int floor = min_rank_below(join, ambient_atoms(n, ambient), n);
  for (Atom d : atoms) {
    if (!(floor < atom_rank(d, n))) return false;
  }
  return true;
}

bool is_nbb(std::span<const Atom> atoms, int n, Ambient ambient) {
  const std::size_t m = atoms.size();
  if (m > 20) throw PartitionError("is_nbb: atom set too large");
  const auto order_atoms = ambient_atoms(n, ambient);
  for (Atom a : atoms) {
    if (!is_ambient_atom(a, n, ambient)) {
      throw PartitionError("a_{" + std::to_string(a.i) + "," + std::to_string(a.j) + "} is not an atom of " +
                           ambient_name(ambient) + "_" + std::to_string(n));
    }
  }
  // Joins of all subsets, each from the subset without its lowest atom.
  const std::size_t total = std::size_t{1} << m;
  std::vector<SetPartition> join(total);
  std::vector<int> min_rank(total, n);
  join[0] = SetPartition::discrete(n);
  for (std::size_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    const std::size_t rest = mask & (mask - 1);
    const SetPartition a = atom_partition(atoms[low], n);
    join[mask] = ambient == Ambient::kNC ? nc_join(join[rest], a) : pe_join(join[rest], a);
    min_rank[mask] = std::min(min_rank[rest], atom_rank(atoms[low], n));
    if (min_rank_below(join[mask], order_atoms, n) < min_rank[mask]) return false;
  }
  return true;
}

std::vector<AtomSet> enumerate_nbb_bases_top(int n, Ambient ambient) {
  check_n(n, ambient, kMaxNbbN, "enumerate_nbb_bases_top");
  std::vector<std::vector<Atom>> by_rank(n);
  for (Atom a : ambient_atoms(n, ambient)) by_rank[atom_rank(a, n)].push_back(a);
  const SetPartition top = SetPartition::full(n);
  const std::size_t needed = n >= 2 ? static_cast<std::size_t>(n - 2) : 0;

  std::vector<AtomSet> out;
  AtomSet chosen;
  // Ranks 1..n-1; at most one atom per rank and no crossing pair.
  auto recurse = [&](auto&& self, int rank, const SetPartition& join) -> void {
    if (chosen.size() + static_cast<std::size_t>(n - rank) < needed) return;
    if (rank == n) {
      if (join == top && is_nbb(chosen, n, ambient)) out.push_back(chosen);
      return;
    }
    self(self, rank + 1, join);
    for (Atom a : by_rank[rank]) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](Atom b) { return atoms_cross(a, b); })) continue;
      chosen.push_back(a);
      const SetPartition ap = atom_partition(a, n);
      self(self, rank + 1, ambient == Ambient::kNC ? nc_join(join, ap) : pe_join(join, ap));
      chosen.pop_back();
    }
  };
  if (n == 1) {
    out.push_back({});
    return out;
  }
  recurse(recurse, 1, SetPartition::discrete(n));
  std::sort(out.begin(), out.end(), [n](const AtomSet& a, const AtomSet& b) { return atom_set_less(a, b, n); });
  return out;
}

namespace {

// Subsets of `atoms` (by bitmask) that are NBB with join equal to `target`.
std::vector<AtomSet> nbb_by_subsets(const std::vector<Atom>& atoms, const std::vector<Atom>& order_atoms,
                                    const SetPartition& target, int n, Ambient ambient) {
  const std::size_t m = atoms.size();
  if (m > 22) throw std::out_of_range("brute-force NBB enumeration: too many atoms");
  const std::size_t total = std::size_t{1} << m;
  std::vector<SetPartition> join(total);
  std::vector<int> min_rank(total, n);
  std::vector<char> has_bb(total, 0);
  join[0] = SetPartition::discrete(n);
  for (std::size_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    const SetPartition& rest = join[mask & (mask - 1)];
    const SetPartition a = atom_partition(atoms[low], n);
    join[mask] = ambient == Ambient::kNC ? nc_join(rest, a) : pe_join(rest, a);
    min_rank[mask] = std::min(min_rank[mask & (mask - 1)], atom_rank(atoms[low], n));
    const bool bb = min_rank_below(join[mask], order_atoms, n) < min_rank[mask];
    char sub = bb;
    for (std::size_t bits = mask; bits && !sub; bits &= bits - 1) {
      sub = has_bb[mask & ~(std::size_t{1} << std::countr_zero(bits))];
    }
    has_bb[mask] = sub;
  }
  std::vector<AtomSet> out;
  for (std::size_t mask = 1; mask < total; ++mask) {
    if (has_bb[mask] || !(join[mask] == target)) continue;
    AtomSet set;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1u) set.push_back(atoms[k]);
    }
    sort_atoms(set, n);
    out.push_back(std::move(set));
  }
  if (target.is_discrete()) out.insert(out.begin(), AtomSet{});
  std::sort(out.begin(), out.end(), [n](const AtomSet& a, const AtomSet& b) { return atom_set_less(a, b, n); });
  return out;
}

}  // namespace

std::vector<AtomSet> enumerate_nbb_bases_top_bruteforce(int n, Ambient ambient) {
  check_n(n, ambient, 7, "enumerate_nbb_bases_top_bruteforce");
  const auto atoms = ambient_atoms(n, ambient);
  return nbb_by_subsets(atoms, atoms, SetPartition::full(n), n, ambient);
}

std::vector<AtomSet> enumerate_nbb_bases_nc_by_rank(const SetPartition& x) {
  if (!is_noncrossing(x)) throw PartitionError("NBB bases requested for crossing partition");
  const int n = x.n();
  std::vector<std::vector<Atom>> by_rank(n);
  for (Atom a : ambient_atoms(n, Ambient::kNC)) {
    if (atom_below(a, x)) by_rank[atom_rank(a, n)].push_back(a);
  }
  std::vector<AtomSet> out;
  AtomSet chosen;
  auto recurse = [&](auto&& self, int rank) -> void {
    if (rank >= n) {
      SetPartition acc = SetPartition::discrete(n);
      for (Atom a : chosen) acc = join_partition(acc, atom_partition(a, n));
      if (acc == x) out.push_back(chosen);
      return;
    }
    self(self, rank + 1);
    for (Atom a : by_rank[rank]) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](Atom b) { return atoms_cross(a, b); })) continue;
      chosen.push_back(a);
      self(self, rank + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 1);
  std::sort(out.begin(), out.end(), [n](const AtomSet& a, const AtomSet& b) { return atom_set_less(a, b, n); });
  return out;
}

std::vector<AtomSet> enumerate_nbb_bases_nc_bruteforce(const SetPartition& x) {
  if (!is_noncrossing(x)) throw PartitionError("NBB bases requested for crossing partition");
  const int n = x.n();
  if (n > 7) throw std::out_of_range("enumerate_nbb_bases_nc_bruteforce: n > 7");
  const auto all = ambient_atoms(n, Ambient::kNC);
  std::vector<Atom> below;
  for (Atom a : all) {
    if (atom_below(a, x)) below.push_back(a);
  }
  return nbb_by_subsets(below, all, x, n, Ambient::kNC);
}

std::int64_t moebius_via_nbb(int n, Ambient ambient) {
  std::int64_t mu = 0;
  for (const auto& base : enumerate_nbb_bases_top(n, ambient)) mu += base.size() % 2 == 0 ? 1 : -1;
  return mu;
}

bool NcTree::is_tree() const {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool NcTree::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

std::vector<int> NcTree::neighbours(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int NcTree::root_split() const {
  if (n < 2 || !has_edge(1, n)) return 0;
  // Component of 1 once the edge {1, n} is gone.
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbours(v)) {
      if ((v == 1 && w == n) || (v == n && w == 1) || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  int k = 0;
  while (k + 1 <= n && seen[k + 1]) ++k;
  for (int v = k + 1; v <= n; ++v) {
    if (seen[v]) return 0;
  }
  return k;
}

std::string NcTree::to_dot(const std::string& name, const std::string& colour) const {
  std::ostringstream os;
  os << "  subgraph cluster_" << name << " {\n    label=\"" << name << "\";\n";
  if (!colour.empty()) os << "    color=" << colour << "; penwidth=3;\n";
  for (int v = 1; v <= n; ++v) os << "    " << name << "_" << v << " [label=\"" << v << "\"];\n";
  for (auto [a, b] : edges) os << "    " << name << "_" << a << " -- " << name << "_" << b << ";\n";
  os << "  }\n";
  return os.str();
}

NcTree base_to_tree(std::span<const Atom> base, int n) {
  NcTree tree{n, {}};
  for (Atom a : base) tree.edges.emplace_back(a.i, a.j);
  std::sort(tree.edges.begin(), tree.edges.end());
  if (!tree.is_tree()) throw PartitionError("atom set " + atom_set_to_string(base) + " does not form a tree");
  return tree;
}

const char* base_kind_name(BaseKind k) {
  switch (k) {
    case BaseKind::kKept: return "kept";
    case BaseKind::kS1: return "S1";
    case BaseKind::kS2: return "S2";
    case BaseKind::kR: return "R";
  }
  return "?";
}

BaseClass classify_base(std::span<const Atom> base, int n) {
  if (n < 3) throw PartitionError("classify_base needs n >= 3");
  if (ambient_join(base, n, Ambient::kNC) != SetPartition::full(n) || !is_nbb(base, n, Ambient::kNC)) {
    throw PartitionError(atom_set_to_string(base) + " is not an NC-NBB base of the top element");
  }
  BaseClass c;
  const auto contains = [&](Atom a) { return std::find(base.begin(), base.end(), a) != base.end(); };
  c.in_s1 = contains({1, n - 1});
  c.in_s2 = contains({n - 1, n});

  AtomSet rest;
  for (Atom a : base) {
    if (!(a == Atom{1, n})) rest.push_back(a);
  }
  const auto lifted = pe_repair(ambient_join(rest, n, Ambient::kNC));
  c.in_r = lifted.has_value() && lifted->is_full();

  if (c.in_s1 && !c.in_r) throw std::logic_error("base in S1 but not in R: " + atom_set_to_string(base));
  if (c.in_s2 && c.in_r) throw std::logic_error("base in both S2 and R: " + atom_set_to_string(base));
  c.kind = c.in_s2 ? BaseKind::kS2 : c.in_r ? BaseKind::kR : c.in_s1 ? BaseKind::kS1 : BaseKind::kKept;
  return c;
}

std::string atom_set_to_string(std::span<const Atom> atoms) {
  std::string out = "{";
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k) out += ",";
    out += "a" + std::to_string(atoms[k].i) + "_" + std::to_string(atoms[k].j);
  }
  return out + "}";
}

}  // namespace ncposet
