#include <doctest.h>

#include <algorithm>
#include <set>

#include "ncposet/builders.hpp"
#include "ncposet/nbb.hpp"
#include "oracles.hpp"

using namespace ncposet;

namespace {

SetPartition P(const char* s) { return SetPartition::parse(s); }

AtomSet star(int n) {
  AtomSet out;
  for (int j = 2; j <= n; ++j) out.push_back({1, j});
  return out;
}

AtomSet fan(int n) {
  AtomSet out;
  for (int i = 1; i < n; ++i) out.push_back({i, n});
  return out;
}

bool contains(const std::vector<AtomSet>& bases, AtomSet x, int n) {
  std::sort(x.begin(), x.end(), [n](Atom a, Atom b) { return atom_key_less(a, b, n); });
  return std::find(bases.begin(), bases.end(), x) != bases.end();
}

}  // namespace

TEST_CASE("atom ranks") {
  CHECK(atom_rank({2, 4}, 5) == 4);
  CHECK(atom_rank({1, 5}, 5) == 1);
  CHECK(atom_rank({3, 5}, 5) == 3);
  CHECK(atom_rank({1, 2}, 5) == 2);
  // The rank is the first chain element above the atom.
  for (int n = 2; n <= 8; ++n) {
    const auto chain = distinguished_chain(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        int first = 0;
        while (!leq_dref(SetPartition::atom(n, i, j), chain.elements[first])) ++first;
        CHECK(atom_rank({i, j}, n) == first);
      }
    }
  }
  std::vector<Atom> all = ambient_atoms(5, Ambient::kNC);
  CHECK(all.size() == 10);
  CHECK(all.front() == Atom{1, 5});
  CHECK(ambient_atoms(5, Ambient::kPE).size() == 8);
  CHECK_FALSE(is_ambient_atom({1, 4}, 5, Ambient::kPE));
  CHECK_FALSE(is_ambient_atom({4, 5}, 5, Ambient::kPE));
  CHECK(is_ambient_atom({1, 4}, 5, Ambient::kNC));
  CHECK(atom_partition({2, 4}, 5) == P("1|24|3|5"));
  CHECK(parse_ambient("pe") == Ambient::kPE);
  CHECK(std::string(ambient_name(Ambient::kNC)) == "nc");
  CHECK_THROWS_AS(parse_ambient("pi"), std::invalid_argument);
}

TEST_CASE("atom joins") {
  const AtomSet crossing{{1, 3}, {2, 5}};
  CHECK(ambient_join(crossing, 5, Ambient::kNC) == P("1235|4"));
  const AtomSet pair{{1, 2}, {2, 3}};
  CHECK(ambient_join(pair, 4, Ambient::kNC) == P("123|4"));
  CHECK(ambient_join(pair, 4, Ambient::kPE) == SetPartition::full(4));
  CHECK(ambient_join(AtomSet{}, 4, Ambient::kNC) == SetPartition::discrete(4));
  const AtomSet foreign{{3, 4}};
  CHECK_THROWS_AS(ambient_join(foreign, 4, Ambient::kPE), PartitionError);
}

TEST_CASE("bounded-below examples") {
  const AtomSet crossing{{1, 3}, {2, 5}};
  CHECK(is_bb(crossing, 5, Ambient::kNC));
  const AtomSet same_rank{{1, 3}, {2, 3}};
  CHECK(is_bb(same_rank, 5, Ambient::kNC));
  for (const Atom a : ambient_atoms(5, Ambient::kNC)) CHECK_FALSE(is_bb(AtomSet{a}, 5, Ambient::kNC));
  CHECK_FALSE(is_nbb(crossing, 5, Ambient::kNC));
  CHECK(is_nbb(star(5), 5, Ambient::kNC));
  const AtomSet foreign{{1, 4}};
  CHECK_THROWS_AS(is_bb(foreign, 5, Ambient::kPE), PartitionError);
  CHECK_THROWS_AS(is_nbb(foreign, 5, Ambient::kPE), PartitionError);
}

TEST_CASE("crossing pairs and same-rank pairs are bounded below, n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    const auto atoms = ambient_atoms(n, Ambient::kNC);
    for (std::size_t s = 0; s < atoms.size(); ++s) {
      for (std::size_t t = s + 1; t < atoms.size(); ++t) {
        const Atom a = atoms[s], b = atoms[t];
        const bool crossing = blocks_cross(element_bit(a.i) | element_bit(a.j), element_bit(b.i) | element_bit(b.j));
        const bool same = atom_rank(a, n) == atom_rank(b, n);
        if (!crossing && !same) continue;
        CAPTURE(n);
        CAPTURE(a.i);
        CAPTURE(a.j);
        CAPTURE(b.i);
        CAPTURE(b.j);
        REQUIRE(is_bb(AtomSet{a, b}, n, Ambient::kNC));
      }
    }
  }
}

TEST_CASE("NBB bases of the top element: counts") {
  CHECK(enumerate_nbb_bases_top(1, Ambient::kNC).size() == 1);
  const auto two = enumerate_nbb_bases_top(2, Ambient::kNC);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == AtomSet{{1, 2}});
  CHECK(enumerate_nbb_bases_top(5, Ambient::kNC).size() == 14);
  CHECK(enumerate_nbb_bases_top(5, Ambient::kPE).size() == 4);
  for (int n = 2; n <= 8; ++n) {
    const auto bases = enumerate_nbb_bases_top(n, Ambient::kNC);
    CHECK(static_cast<std::int64_t>(bases.size()) == oracle::catalan(n - 1));
    for (const auto& b : bases) CHECK(static_cast<int>(b.size()) == n - 1);
  }
  for (int n = 4; n <= 8; ++n) {
    const auto bases = enumerate_nbb_bases_top(n, Ambient::kPE);
    CHECK(static_cast<std::int64_t>(bases.size()) == 4 * oracle::binom(2 * n - 5, n - 4) / n);
    for (const auto& b : bases) CHECK(static_cast<int>(b.size()) == n - 1);
  }
  CHECK(enumerate_nbb_bases_top(3, Ambient::kPE).empty());
  CHECK_THROWS_AS(enumerate_nbb_bases_top(10, Ambient::kNC), std::out_of_range);
  CHECK_THROWS_AS(enumerate_nbb_bases_top(2, Ambient::kPE), std::out_of_range);
}

TEST_CASE("pruned enumeration equals the definition") {
  for (int n = 1; n <= 6; ++n)
    CHECK(enumerate_nbb_bases_top(n, Ambient::kNC) == enumerate_nbb_bases_top_bruteforce(n, Ambient::kNC));
  for (int n = 3; n <= 7; ++n)
    CHECK(enumerate_nbb_bases_top(n, Ambient::kPE) == enumerate_nbb_bases_top_bruteforce(n, Ambient::kPE));
}

TEST_CASE("bases are sorted by key") {
  const int n = 6;
  const auto bases = enumerate_nbb_bases_top(n, Ambient::kNC);
  for (const auto& b : bases)
    CHECK(std::is_sorted(b.begin(), b.end(), [n](Atom x, Atom y) { return atom_key_less(x, y, n); }));
  for (std::size_t k = 1; k < bases.size(); ++k) CHECK(bases[k - 1] < bases[k]);
}

TEST_CASE("rank selection gives the NBB bases of every noncrossing element, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& x : enumerate_noncrossing(n)) {
      CAPTURE(x.to_string());
      REQUIRE(enumerate_nbb_bases_nc_by_rank(x) == enumerate_nbb_bases_nc_bruteforce(x));
    }
  }
  CHECK_THROWS_AS(enumerate_nbb_bases_nc_by_rank(P("13|24")), PartitionError);
}

TEST_CASE("NBB bases and the Moebius function") {
  for (int n = 2; n <= 7; ++n) CHECK(moebius_via_nbb(n, Ambient::kNC) == moebius_bottom_top(build_nc(n).poset));
  for (int n = 3; n <= 7; ++n) CHECK(moebius_via_nbb(n, Ambient::kPE) == moebius_bottom_top(build_pe_dref(n).poset));
  CHECK(moebius_via_nbb(5, Ambient::kNC) == 14);
  CHECK(moebius_via_nbb(5, Ambient::kPE) == 4);
  CHECK(moebius_via_nbb(2, Ambient::kNC) == -1);
}

TEST_CASE("trees of the bases") {
  const auto t = base_to_tree(star(5), 5);
  CHECK(t.is_tree());
  CHECK(t.has_edge(5, 1));
  CHECK(t.neighbours(1) == std::vector<int>{2, 3, 4, 5});
  CHECK(t.root_split() == 4);
  const auto two = base_to_tree(AtomSet{{1, 2}}, 2);
  CHECK(two.edges.size() == 1);
  const AtomSet path{{1, 5}, {2, 5}, {2, 3}, {3, 4}};
  CHECK(contains(enumerate_nbb_bases_top(5, Ambient::kNC), path, 5));
  CHECK(contains(enumerate_nbb_bases_top(5, Ambient::kNC), star(5), 5));
  CHECK(base_to_tree(path, 5).root_split() == 1);
  const AtomSet cycle{{1, 2}, {2, 3}, {1, 3}};
  CHECK_THROWS_AS(base_to_tree(cycle, 4), PartitionError);
  const auto dot = t.to_dot("star", "red");
  CHECK(dot.find("star_1 -- star_5") != std::string::npos);
  CHECK(dot.find("red") != std::string::npos);

  for (int n = 2; n <= 8; ++n) {
    for (const auto& b : enumerate_nbb_bases_top(n, Ambient::kNC)) {
      const auto tree = base_to_tree(b, n);
      CHECK(tree.is_tree());
      CHECK(tree.has_edge(1, n));
      CHECK(tree.root_split() >= 1);
    }
  }
}

TEST_CASE("classification of the NC bases") {
  const auto s = classify_base(star(5), 5);
  CHECK(s.in_s1);
  CHECK(s.in_r);
  CHECK_FALSE(s.in_s2);
  CHECK(s.kind == BaseKind::kR);
  const auto f = classify_base(fan(5), 5);
  CHECK(f.in_s2);
  CHECK_FALSE(f.in_r);
  CHECK(f.kind == BaseKind::kS2);
  CHECK(std::string(base_kind_name(BaseKind::kS1)) == "S1");
  const AtomSet crossing{{1, 3}, {2, 5}, {1, 5}, {3, 4}};
  CHECK_THROWS_AS(classify_base(crossing, 5), PartitionError);

  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    std::int64_t s1 = 0, s2 = 0, r = 0;
    std::set<AtomSet> kept;
    for (const auto& b : enumerate_nbb_bases_top(n, Ambient::kNC)) {
      const auto c = classify_base(b, n);
      s1 += c.in_s1;
      s2 += c.in_s2;
      r += c.in_r;
      if (c.kind == BaseKind::kKept) kept.insert(b);
    }
    CHECK(s2 == oracle::catalan(n - 2));
    CHECK(r == oracle::catalan(n - 2));
    CHECK(s1 == oracle::catalan(n - 3));
    const auto pe = enumerate_nbb_bases_top(n, Ambient::kPE);
    CHECK(kept == std::set<AtomSet>(pe.begin(), pe.end()));
  }
}

TEST_CASE("interval sizes above a_{n-2,n-1} in PE_n") {
  const std::vector<std::size_t> expected{4, 12, 37, 118, 387};
  for (int n = 4; n <= 8; ++n) {
    const auto pe = build_pe_dref(n);
    const auto a = pe.index_of(SetPartition::atom(n, n - 2, n - 1));
    CHECK(pe.poset.up_set(a).count() == expected[n - 4]);
  }
}

TEST_CASE("atom set printing") {
  const AtomSet x{{1, 5}, {2, 5}};
  CHECK(atom_set_to_string(x) == "{a1_5,a2_5}");
  CHECK(atom_set_to_string(AtomSet{}) == "{}");
}
