#include <doctest.h>

#include "ncposet/builders.hpp"
#include "ncposet/io.hpp"
#include "ncposet/labeling.hpp"
#include "ncposet/nbb.hpp"

using namespace ncposet;

namespace {

std::size_t occurrences(const std::string& s, const std::string& what) {
  std::size_t count = 0;
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST_CASE("JSON round trip") {
  for (const auto& pp : {build_nc(5), build_pe_dref(5), build_pi(4)}) {
    const auto text = poset_to_json(pp.poset);
    const auto back = poset_from_json(text);
    CHECK(back.keys() == pp.poset.keys());
    CHECK(back.cover_relations() == pp.poset.cover_relations());
    CHECK(poset_to_json(back) == text);
  }
  const auto tiny = poset_to_json(build_nc(2).poset);
  CHECK(tiny.find("\"elements\"") != std::string::npos);
  CHECK(tiny.find("\"covers\"") != std::string::npos);
  CHECK(tiny.find("[0,1]") != std::string::npos);
}

TEST_CASE("malformed JSON is rejected") {
  for (const char* bad : {"", "{", "[]", R"({"elements": []})", R"({"elements": [1], "covers": []})",
                          R"({"elements": ["a"], "covers": [[0]]})", R"({"elements": ["a", "b"], "covers": [[0, 2]]})",
                          R"({"elements": ["a", "b"], "covers": [[0, -1]]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(poset_from_json(bad), FormatError);
  }
  CHECK_THROWS_AS(poset_from_json(R"({"elements": ["a", "b"], "covers": [[0, 1], [1, 0]]})"), PosetError);
  CHECK_THROWS_AS(poset_from_json(R"({"elements": ["a", "b", "c"], "covers": [[0, 1], [1, 2], [0, 2]]})"),
                  PosetError);
}

TEST_CASE("Hasse diagram DOT") {
  const auto pp = build_pe_dref(4);
  const auto dot = poset_to_dot(pp.poset);
  CHECK(dot.rfind("digraph hasse {", 0) == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(occurrences(dot, " -> ") == pp.poset.num_covers());
  CHECK(occurrences(dot, "rank=same") == 4);
  CHECK(dot.find("\"14|23\"") != std::string::npos);
  CHECK(dot.find("label=\"1\"]") == std::string::npos);

  const auto ops = *is_lattice(pp.poset).ops;
  const auto lab = left_modular_labeling(pp.poset, ops, distinguished_chain(4).indices_in(pp));
  const auto labelled = poset_to_dot(pp.poset, &lab, "pe4");
  CHECK(labelled.rfind("digraph pe4 {", 0) == 0);
  // One label per node and one per edge.
  CHECK(occurrences(labelled, " [label=\"") == pp.size() + pp.poset.num_covers());
}

TEST_CASE("NBB trees DOT") {
  const auto bases = enumerate_nbb_bases_top(5, Ambient::kNC);
  const auto plain = nbb_trees_to_dot(bases, 5, false);
  CHECK(plain.rfind("graph nbb_trees {", 0) == 0);
  CHECK(occurrences(plain, "subgraph") == bases.size());
  CHECK(occurrences(plain, " -- ") == bases.size() * 4);
  const auto coloured = nbb_trees_to_dot(bases, 5, true);
  CHECK(coloured.find("red") != std::string::npos);
  CHECK(coloured.find("green") != std::string::npos);
  CHECK(coloured.find("blue") == std::string::npos);
}
