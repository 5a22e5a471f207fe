#include <doctest.h>

#include <algorithm>

#include "ncposet/builders.hpp"
#include "ncposet/poset.hpp"
#include "oracles.hpp"

using namespace ncposet;

namespace {

std::vector<std::string> names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

// Pentagon N5: 0 < a < b < 1, 0 < c < 1.
FinitePoset pentagon() {
  const std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return FinitePoset::from_covers(names(5), covers);
}

// Two minima under two maxima: no joins.
FinitePoset bowtie() {
  const std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return FinitePoset::from_covers(names(4), covers);
}

FinitePoset boolean(int k) {
  const std::size_t size = std::size_t{1} << k;
  return FinitePoset::from_order_oracle(names(size), [](std::size_t a, std::size_t b) { return (a & b) == a; });
}

}  // namespace

TEST_CASE("order validation reports a witness") {
  SUBCASE("reflexivity") {
    try {
      FinitePoset::from_order_oracle(names(3), [](std::size_t a, std::size_t b) { return a < b; });
      FAIL("accepted an irreflexive relation");
    } catch (const OrderViolation& e) {
      CHECK(e.witness[0] == e.witness[1]);
      CHECK(e.witness[1] == e.witness[2]);
    }
  }
  SUBCASE("antisymmetry") {
    try {
      FinitePoset::from_order_oracle(names(3), [](std::size_t a, std::size_t b) { return a == b || a + b == 1; });
      FAIL("accepted a symmetric relation");
    } catch (const OrderViolation& e) {
      CHECK(e.witness[0] != e.witness[1]);
      CHECK(e.witness[1] == e.witness[2]);
    }
  }
  SUBCASE("transitivity") {
    try {
      FinitePoset::from_order_oracle(names(3), [](std::size_t a, std::size_t b) { return a == b || b == a + 1; });
      FAIL("accepted a non-transitive relation");
    } catch (const OrderViolation& e) {
      CHECK(e.witness == std::array<std::size_t, 3>{0, 1, 2});
    }
  }
  const std::vector<std::pair<std::size_t, std::size_t>> cyclic{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(FinitePoset::from_covers(names(2), cyclic), PosetError);
}

TEST_CASE("covers, bounds and linear extension") {
  const auto p = pentagon();
  CHECK(p.num_covers() == 5);
  CHECK(p.is_cover(1, 2));
  CHECK_FALSE(p.is_cover(0, 2));
  CHECK(p.bottom() == 0u);
  CHECK(p.top() == 4u);
  CHECK(p.index_of("e3") == 3u);
  CHECK_FALSE(p.index_of("x").has_value());
  const auto& lin = p.linear_extension();
  for (std::size_t a = 0; a < lin.size(); ++a)
    for (std::size_t b = a + 1; b < lin.size(); ++b) CHECK_FALSE(p.less(lin[b], lin[a]));
  CHECK_FALSE(bowtie().is_bounded());
}

TEST_CASE("NC_4 cover count by brute force") {
  const auto nc = oracle::all_noncrossing(4);
  std::size_t covers = 0;
  for (const auto& x : nc) {
    for (const auto& y : nc) {
      if (x == y || !oracle::leq(x, y)) continue;
      const bool between = std::any_of(nc.begin(), nc.end(), [&](const SetPartition& z) {
        return z != x && z != y && oracle::leq(x, z) && oracle::leq(z, y);
      });
      covers += !between;
    }
  }
  CHECK(covers == 28);
  CHECK(build_nc(4).poset.num_covers() == covers);
}

TEST_CASE("transitive reduction matches the definition") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pp : {build_pi(n), build_nc(n)}) {
      auto covers = pp.poset.cover_relations();
      auto naive = naive_transitive_reduction(pp.poset);
      std::sort(naive.begin(), naive.end());
      CHECK(covers == naive);
    }
  }
  for (int n = 3; n <= 6; ++n) {
    const auto pp = build_pe_dref(n);
    auto naive = naive_transitive_reduction(pp.poset);
    std::sort(naive.begin(), naive.end());
    CHECK(pp.poset.cover_relations() == naive);
  }
}

TEST_CASE("from_covers and from_order_oracle agree") {
  const auto nc = build_nc(5);
  const auto again = FinitePoset::from_covers(nc.poset.keys(), nc.poset.cover_relations());
  for (std::size_t i = 0; i < nc.size(); ++i)
    for (std::size_t j = 0; j < nc.size(); ++j) CHECK(again.leq(i, j) == nc.poset.leq(i, j));
}

TEST_CASE("lattice detection") {
  CHECK(is_lattice(pentagon()).is_lattice);
  const auto v = is_lattice(bowtie());
  CHECK_FALSE(v.is_lattice);
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(v.reason.empty());
  for (int n = 1; n <= 6; ++n) CHECK(is_lattice(build_nc(n).poset).is_lattice);
}

TEST_CASE("meet and join tables agree with the partition operations") {
  const auto pp = build_nc(6);
  const auto v = is_lattice(pp.poset);
  REQUIRE(v.ops.has_value());
  for (std::size_t a = 0; a < pp.size(); ++a) {
    for (std::size_t b = 0; b < pp.size(); ++b) {
      REQUIRE(pp[v.ops->meet(a, b)] == nc_meet(pp[a], pp[b]));
      REQUIRE(pp[v.ops->join(a, b)] == nc_join(pp[a], pp[b]));
    }
  }
}

TEST_CASE("gradedness") {
  const auto g = is_graded(build_nc(5).poset);
  CHECK(g.graded);
  CHECK(g.height == 4);
  CHECK_FALSE(is_graded(pentagon()).graded);
  CHECK(is_graded(boolean(3)).height == 3);
}

TEST_CASE("Moebius recursion against the dual recursion") {
  for (const auto& p : {build_pi(4).poset, build_nc(5).poset, build_pe_dref(5).poset, pentagon(), boolean(3)}) {
    const auto mu = moebius(p);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) REQUIRE(mu(x, y) == oracle::moebius_dual(p, x, y));
  }
  CHECK(moebius_bottom_top(boolean(2)) == 1);
  CHECK(moebius_bottom_top(boolean(4)) == 1);
  CHECK(moebius_bottom_top(pentagon()) == 1);
  CHECK(moebius_bottom_top(chain_poset(1)) == -1);
  CHECK(moebius_bottom_top(chain_poset(3)) == 0);
  CHECK_THROWS_AS(moebius_bottom_top(bowtie()), PosetError);
  const auto nc = build_nc(5);
  const auto to_top = moebius_to(nc.poset, *nc.poset.top());
  CHECK(to_top[*nc.poset.bottom()] == 14);
  CHECK(moebius_value(nc.poset, *nc.poset.bottom(), *nc.poset.top()) == 14);
}

TEST_CASE("direct products") {
  const auto prod = direct_product(build_nc(3).poset, chain_poset(1));
  CHECK(prod.size() == 10);
  CHECK(prod.num_covers() == 6 * 2 + 5);
  CHECK(is_lattice(prod).is_lattice);
  const auto b2 = direct_product(chain_poset(1), chain_poset(1));
  CHECK(b2.size() == 4);
  CHECK(moebius_bottom_top(b2) == 1);
  // mu is multiplicative.
  CHECK(moebius_bottom_top(prod) == moebius_bottom_top(build_nc(3).poset) * -1);
}

TEST_CASE("maximal chains") {
  CHECK(maximal_chains(build_nc(4).poset).size() == 16);
  CHECK(maximal_chains(build_nc(5).poset).size() == 125);
  for (int n = 2; n <= 7; ++n) {
    std::uint64_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= static_cast<std::uint64_t>(n);
    CHECK(count_maximal_chains(build_nc(n).poset) == expected);
  }
  CHECK(count_maximal_chains(pentagon()) == 2);
  for (const auto& c : maximal_chains(build_nc(4).poset)) CHECK(is_maximal_chain(build_nc(4).poset, c));
  const auto p = pentagon();
  CHECK(saturated_chains(p, 0, 2).size() == 1);
  CHECK(saturated_chains(p, 0, 4).size() == 2);
  CHECK(saturated_chains(p, 3, 2).empty());
}

TEST_CASE("modular pairs and left-modular elements") {
  const auto p = pentagon();
  const auto ops = *is_lattice(p).ops;
  // In N5 with 0 < a < b < 1 and c: the pair (c, b) fails, since
  // (a v c) ^ b = b but a v (c ^ b) = a.
  CHECK_FALSE(is_modular_pair(p, ops, 3, 2));
  CHECK_FALSE(is_left_modular_element(p, ops, 3));
  CHECK(is_left_modular_element(p, ops, 1));
  CHECK(is_left_modular_element(p, ops, 2));
  const std::vector<std::size_t> chain{0, 1, 2, 4};
  CHECK(is_left_modular_chain(p, ops, chain));
  const std::vector<std::size_t> other{0, 3, 4};
  CHECK_FALSE(is_left_modular_chain(p, ops, other));
  const std::vector<std::size_t> broken{0, 2, 4};
  CHECK_THROWS_AS(is_left_modular_chain(p, ops, broken), PosetError);
}

TEST_CASE("induced subposets") {
  const auto b3 = boolean(3);
  const std::vector<std::size_t> keep{0, 1, 2, 7};
  const auto q = b3.induced(keep);
  CHECK(q.size() == 4);
  CHECK(q.num_covers() == 4);
  CHECK(q.key(3) == "e7");
  CHECK(is_lattice(q).is_lattice);
}
