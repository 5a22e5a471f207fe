#include "ncposet/parking.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace ncposet {

namespace {

void check_range(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw std::out_of_range(std::string(what) + ": n=" + std::to_string(n) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

using CoverSet = std::set<std::pair<std::size_t, std::size_t>>;

PartitionPoset poset_on_pe(int n, const std::vector<SetPartition>& pe, const PartitionPoset& host,
                           const CoverSet& host_covers) {
  PartitionPoset index_only = PartitionPoset::from_covers(n, pe, {});
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  covers.reserve(host_covers.size());
  for (auto [a, b] : host_covers) covers.emplace_back(index_only.index_of(host[a]), index_only.index_of(host[b]));
  std::sort(covers.begin(), covers.end());
  return PartitionPoset::from_covers(n, pe, covers);
}

}  // namespace

bool is_parking_function(std::span<const int> word) {
  const int m = static_cast<int>(word.size());
  std::vector<int> at_most(m + 2, 0);
  for (int w : word) {
    if (w < 1) return false;
    if (w <= m) ++at_most[w];
  }
  int running = 0;
  for (int k = 1; k <= m; ++k) {
    running += at_most[k];
    if (running < k) return false;
  }
  return true;
}

std::vector<int> chain_parking_word(const PartitionPoset& nc, std::span<const std::size_t> chain) {
  if (!is_maximal_chain(nc.poset, chain)) throw LabelingError("chain_parking_word: chain is not maximal");
  std::vector<int> word;
  word.reserve(chain.size());
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) word.push_back(parking_label(nc[chain[k]], nc[chain[k + 1]]));
  return word;
}

ChainSet build_C(int n) {
  check_range("build_C", n, 3, kMaxChainN);
  ChainSet out{build_nc(n), {}};
  out.chains = maximal_chains(out.nc.poset);
  return out;
}

ChainSet build_D(int n) {
  ChainSet out = build_C(n);
  std::erase_if(out.chains, [&](const Chain& c) {
    const auto word = chain_parking_word(out.nc, c);
    return std::find(word.begin(), word.end(), n - 1) != word.end();
  });
  return out;
}

std::uint64_t count_D(int n) {
  check_range("count_D", n, 3, kMaxNcN);
  const PartitionPoset nc = build_nc(n);
  const auto& p = nc.poset;
  // Paths to the top through covers not labelled n-1; indices are rank-sorted.
  std::vector<std::uint64_t> ways(p.size(), 0);
  ways[*p.top()] = 1;
  for (std::size_t x = p.size(); x-- > 0;) {
    for (std::size_t y : p.upper_covers(x)) {
      if (parking_label(nc[x], nc[y]) != n - 1) ways[x] += ways[y];
    }
  }
  return ways[*p.bottom()];
}

PartitionPoset build_pe_pchn(int n) {
  const ChainSet d = build_D(n);
  CoverSet covers;
  std::set<std::size_t> ground;
  for (const auto& c : d.chains) {
    ground.insert(c.begin(), c.end());
    for (std::size_t k = 0; k + 1 < c.size(); ++k) covers.emplace(c[k], c[k + 1]);
  }
  const auto pe = enumerate_pe(n);
  std::vector<SetPartition> found;
  for (std::size_t i : ground) found.push_back(d.nc[i]);
  sort_partitions(found);
  if (found != pe) {
    throw std::logic_error("elements on chains avoiding label n-1 differ from PE_" + std::to_string(n) + " (" +
                           std::to_string(found.size()) + " vs " + std::to_string(pe.size()) + ")");
  }
  return poset_on_pe(n, pe, d.nc, covers);
}

PartitionPoset build_pe_pchn_by_removal(int n) {
  check_range("build_pe_pchn_by_removal", n, 3, kMaxChainN);
  const PartitionPoset dref = build_pe_dref(n);
  CoverSet covers;
  for (auto [a, b] : dref.poset.cover_relations()) {
    if (parking_label(dref[a], dref[b]) != n - 1) covers.emplace(a, b);
  }
  return poset_on_pe(n, dref.elements, dref, covers);
}

EdgeLabeling pe_dref_labeling(const PartitionPoset& pe) {
  const auto verdict = is_lattice(pe.poset);
  if (!verdict.is_lattice) throw LabelingError("pe_dref_labeling: not a lattice");
  return left_modular_labeling(pe.poset, *verdict.ops, distinguished_chain(pe.n).indices_in(pe));
}

EdgeLabeling nc_labeling(const PartitionPoset& nc) { return pe_dref_labeling(nc); }

RestrictionVerdict verify_restriction_el(int n) {
  check_range("verify_restriction_el", n, 3, kMaxRestrictionN);
  RestrictionVerdict v;
  v.n = n;
  const PartitionPoset dref = build_pe_dref(n);
  const EdgeLabeling lambda = pe_dref_labeling(dref);

  v.witnesses_ok = true;
  for (auto [a, b] : dref.poset.cover_relations()) {
    const SetPartition& x = dref[a];
    const SetPartition& y = dref[b];
    if (parking_label(x, y) != n - 1) continue;
    RemovedCover r{x, y, x, lambda.label(a, b), 0};
    std::vector<SetPartition::Mask> blocks;
    for (auto m : x.block_masks()) {
      if (m == x.block_of(1)) {
        blocks.push_back(m | element_bit(n));
      } else if (m != element_bit(n)) {
        blocks.push_back(m);
      }
    }
    r.y_prime = SetPartition::from_masks(n, blocks);
    const auto yp = dref.find(r.y_prime);
    const int k = std::countr_zero(x.block_of(n - 1)) + 1;
    if (!x.is_singleton(n) || !yp || !dref.poset.is_cover(a, *yp)) {
      v.witnesses_ok = false;
      v.failure = "no replacement cover for " + x.to_string() + " < " + y.to_string();
    } else {
      r.label_prime = lambda.label(a, *yp);
      if (parking_label(x, r.y_prime) >= n - 1 || r.label_prime != 1 || r.label <= r.label_prime || r.label != k) {
        v.witnesses_ok = false;
        v.failure = "replacement cover for " + x.to_string() + " < " + y.to_string() + " has wrong labels";
      }
    }
    v.removed.push_back(std::move(r));
  }

  const PartitionPoset pchn = build_pe_pchn(n);
  const PartitionPoset removal = build_pe_pchn_by_removal(n);
  v.constructions_agree =
      pchn.elements == removal.elements && pchn.poset.cover_relations() == removal.poset.cover_relations();
  if (!v.constructions_agree && v.failure.empty()) v.failure = "chain-built and removal-built posets differ";

  const EdgeLabeling restricted = lambda.restrict_to(dref.poset, pchn.poset);
  v.el = verify_el(pchn.poset, restricted);
  v.decreasing_chains = count_decreasing_chains(pchn.poset, restricted);
  return v;
}

}  // namespace ncposet
