#include <doctest.h>

#include <cstdlib>

#include "ncposet/builders.hpp"
#include "ncposet/counting.hpp"
#include "ncposet/labeling.hpp"

using namespace ncposet;

namespace {

SetPartition P(const char* s) { return SetPartition::parse(s); }

struct Labelled {
  PartitionPoset pp;
  EdgeLabeling lab;
  int at(const char* x, const char* y) const { return lab.label(pp.index_of(P(x)), pp.index_of(P(y))); }
};

Labelled leftmod(PartitionPoset pp) {
  const auto ops = *is_lattice(pp.poset).ops;
  const auto chain = distinguished_chain(pp.n).indices_in(pp);
  auto lab = left_modular_labeling(pp.poset, ops, chain);
  return {std::move(pp), std::move(lab)};
}

// Boolean lattice on {0, a, b, 1}.
FinitePoset diamond() {
  const std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return FinitePoset::from_covers({"0", "a", "b", "1"}, covers);
}

}  // namespace

TEST_CASE("left-modular labels on PE_4") {
  const auto l = leftmod(build_pe_dref(4));
  CHECK(l.at("1|2|3|4", "14|2|3") == 1);
  CHECK(l.at("1|2|3|4", "1|23|4") == 3);
  CHECK(l.at("14|2|3", "134|2") == 3);
  CHECK(l.at("14|2|3", "124|3") == 2);
  CHECK(l.at("124|3", "1234") == 3);
  CHECK_THROWS_AS(l.at("1|2|3|4", "1234"), LabelingError);
  // The distinguished chain reads 1, 2, ..., n-1.
  const auto chain = distinguished_chain(4).indices_in(l.pp);
  CHECK(l.lab.word(chain) == std::vector<int>{1, 2, 3});
}

TEST_CASE("left-modular labeling rejects a chain that is not left-modular") {
  const std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  const auto n5 = FinitePoset::from_covers({"0", "a", "b", "c", "1"}, covers);
  const auto ops = *is_lattice(n5).ops;
  const std::vector<std::size_t> bad{0, 3, 4};
  CHECK_THROWS_AS(left_modular_labeling(n5, ops, bad), LabelingError);
  const std::vector<std::size_t> good{0, 1, 2, 4};
  const auto lab = left_modular_labeling(n5, ops, good);
  CHECK(verify_el(n5, lab).el);
}

TEST_CASE("parking labels") {
  CHECK(parking_label(P("1|2|3|4"), P("13|2|4")) == 1);
  CHECK(parking_label(P("12|3|4"), P("12|34")) == 3);
  CHECK(parking_label(P("1|24|3"), P("1|234")) == 2);
  CHECK(parking_label(P("14|2|3"), P("14|23")) == 2);
  CHECK(parking_label(P("1|23|4"), P("1|234")) == 3);
  CHECK(parking_label(P("1|2|3|4"), P("14|2|3")) == 1);
  CHECK_THROWS_AS(parking_label(P("1|2|3|4"), P("123|4")), LabelingError);
  const auto pp = build_nc(4);
  const auto std_lab = standard_nc_labeling(pp);
  const auto park = parking_labeling(pp);
  for (const auto& [a, b] : pp.poset.cover_relations()) CHECK(std_lab.label(a, b) == 4 - park.label(a, b));
}

TEST_CASE("EL checks on small posets") {
  const auto d = diamond();
  EdgeLabeling good(d);
  good.set(0, 0, 1);  // 0 -> a
  good.set(0, 1, 2);  // 0 -> b
  good.set(1, 0, 2);  // a -> 1
  good.set(2, 0, 1);  // b -> 1
  const auto v = verify_el(d, good);
  CHECK(v.el);
  CHECK(v.intervals_checked == 5);
  CHECK(verify_sn_el(d, good));
  CHECK(count_decreasing_chains(d, good) == 1);
  CHECK(rising_chains(d, good, 0, 3).size() == 1);

  EdgeLabeling constant(d);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t s = 0; s < d.upper_covers(x).size(); ++s) constant.set(x, s, 1);
  const auto w = verify_el(d, constant);
  CHECK_FALSE(w.el);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->bottom == 0);
  CHECK(w.witness->top == 3);
  CHECK_FALSE(verify_sn_el(d, constant));
  CHECK(count_decreasing_chains(d, constant) == 2);

  EdgeLabeling twice(d);
  twice.set(0, 0, 1);
  twice.set(0, 1, 1);
  twice.set(1, 0, 2);
  twice.set(2, 0, 2);
  CHECK_FALSE(verify_el(d, twice).el);
}

TEST_CASE("word helpers") {
  const std::vector<int> up{1, 2, 4}, flat{2, 2}, down{3, 2, 2};
  CHECK(is_rising(up));
  CHECK_FALSE(is_rising(flat));
  CHECK(is_weakly_decreasing(flat));
  CHECK(is_weakly_decreasing(down));
  CHECK_FALSE(is_weakly_decreasing(up));
}

TEST_CASE("left-modular labeling of NC_n is an S_n EL-labeling") {
  for (int n = 3; n <= 6; ++n) {
    const auto l = leftmod(build_nc(n));
    CHECK(verify_el(l.pp.poset, l.lab).el);
    CHECK(verify_sn_el(l.pp.poset, l.lab));
    CHECK(static_cast<std::int64_t>(count_decreasing_chains(l.pp.poset, l.lab)) == std::llabs(nc_moebius_closed(n)));
  }
}

TEST_CASE("left-modular labeling of PE_n is an S_n EL-labeling") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto l = leftmod(build_pe_dref(n));
    const auto v = verify_el(l.pp.poset, l.lab);
    CHECK(v.el);
    CHECK_FALSE(v.witness.has_value());
    CHECK(verify_sn_el(l.pp.poset, l.lab));
    const auto dec = static_cast<std::int64_t>(count_decreasing_chains(l.pp.poset, l.lab));
    CHECK(dec == std::llabs(pe_moebius_closed(n)));
    CHECK(dec == std::llabs(moebius_bottom_top(l.pp.poset)));
  }
}

TEST_CASE("standard labeling is EL on NC_n, parking labeling is not on PE_n") {
  const auto nc = build_nc(5);
  CHECK(verify_el(nc.poset, standard_nc_labeling(nc)).el);
  CHECK_FALSE(verify_el(nc.poset, parking_labeling(nc)).el);
  const auto pe = build_pe_dref(5);
  CHECK_FALSE(verify_el(pe.poset, parking_labeling(pe)).el);
}

TEST_CASE("restriction of a labeling to a subposet") {
  const auto l = leftmod(build_nc(4));
  const auto pe = build_pe_dref(4);
  // PE_4 is a ranked subposet, so its covers are NC_4 covers.
  const auto on_pe = l.lab.restrict_to(l.pp.poset, pe.poset);
  for (const auto& [a, b] : pe.poset.cover_relations())
    CHECK(on_pe.label(a, b) == l.lab.label(l.pp.index_of(pe[a]), l.pp.index_of(pe[b])));
  const std::vector<std::size_t> ends{0, *l.pp.poset.top()};
  CHECK_THROWS_AS(l.lab.restrict_to(l.pp.poset, l.pp.poset.induced(ends)), LabelingError);
  const std::vector<std::size_t> keep{0, l.pp.index_of(P("14|2|3")), l.pp.index_of(P("124|3")), *l.pp.poset.top()};
  const auto sub = l.pp.poset.induced(keep);
  const auto r = l.lab.restrict_to(l.pp.poset, sub);
  CHECK(r.word(std::vector<std::size_t>{0, 1, 2, 3}) == std::vector<int>{1, 2, 3});
}
