#include "ncposet/builders.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace ncposet {

namespace {

using Mask = SetPartition::Mask;

void check_range(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw std::out_of_range(std::string(what) + ": n=" + std::to_string(n) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Mask span_mask(int lo, int hi) {
  Mask m = 0;
  for (int i = lo; i <= hi; ++i) m |= element_bit(i);
  return m;
}

// Noncrossing partitions of the interval {lo..hi} as block lists, memoized on
// the interval. The block of lo either is a singleton, or continues at some c,
// in which case {lo+1..c-1} is partitioned independently and lo joins the
// block of c in a noncrossing partition of {c..hi}.
class NcGenerator {
 public:
  const std::vector<std::vector<Mask>>& of(int lo, int hi) {
    auto key = std::make_pair(lo, hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<std::vector<Mask>> out;
    if (lo > hi) {
      out.emplace_back();
    } else {
      for (const auto& rest : of(lo + 1, hi)) {
        auto blocks = rest;
        blocks.push_back(element_bit(lo));
        out.push_back(std::move(blocks));
      }
      for (int c = lo + 1; c <= hi; ++c) {
        const auto inner = of(lo + 1, c - 1);
        const auto outer = of(c, hi);
        for (const auto& p : inner) {
          for (const auto& q : outer) {
            auto blocks = p;
            for (Mask b : q) blocks.push_back(b & element_bit(c) ? (b | element_bit(lo)) : b);
            out.push_back(std::move(blocks));
          }
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::map<std::pair<int, int>, std::vector<std::vector<Mask>>> memo_;
};

}  // namespace

void sort_partitions(std::vector<SetPartition>& xs) {
  std::sort(xs.begin(), xs.end(), [](const SetPartition& a, const SetPartition& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a < b;
  });
}

std::optional<std::size_t> PartitionPoset::find(const SetPartition& x) const {
  auto it = lookup_.find(x);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t PartitionPoset::index_of(const SetPartition& x) const {
  auto i = find(x);
  if (!i) throw std::out_of_range("partition " + x.to_string() + " is not an element");
  return *i;
}

void PartitionPoset::index_elements() {
  lookup_.clear();
  for (std::size_t i = 0; i < elements.size(); ++i) lookup_.emplace(elements[i], i);
}

PartitionPoset PartitionPoset::from_dref(int n, std::vector<SetPartition> elements) {
  PartitionPoset pp;
  pp.n = n;
  sort_partitions(elements);
  pp.elements = std::move(elements);
  std::vector<std::string> keys;
  keys.reserve(pp.elements.size());
  for (const auto& x : pp.elements) keys.push_back(x.to_string());
  const auto& xs = pp.elements;
  pp.poset = FinitePoset::from_order_oracle(
      std::move(keys), [&xs](std::size_t a, std::size_t b) { return leq_dref(xs[a], xs[b]); });
  pp.index_elements();
  return pp;
}

PartitionPoset PartitionPoset::from_covers(
    int n, std::vector<SetPartition> elements,
    std::span<const std::pair<std::size_t, std::size_t>> covers) {
  PartitionPoset pp;
  pp.n = n;
  pp.elements = std::move(elements);
  std::vector<std::string> keys;
  keys.reserve(pp.elements.size());
  for (const auto& x : pp.elements) keys.push_back(x.to_string());
  pp.poset = FinitePoset::from_covers(std::move(keys), covers);
  pp.index_elements();
  return pp;
}

std::vector<SetPartition> enumerate_partitions(int n) {
  check_range("enumerate_partitions", n, 1, SetPartition::kMaxN);
  std::vector<SetPartition> out;
  // Restricted growth strings: a[0] = 0, a[k] <= 1 + max(a[0..k-1]).
  std::vector<int> a(n, 0), max_prefix(n, 0);
  while (true) {
    std::vector<Mask> blocks(n, 0);
    int used = 0;
    for (int k = 0; k < n; ++k) {
      blocks[a[k]] |= element_bit(k + 1);
      used = std::max(used, a[k] + 1);
    }
    blocks.resize(used);
    out.push_back(SetPartition::from_masks(n, blocks));

    int k = n - 1;
    while (k > 0 && a[k] == max_prefix[k - 1] + 1) --k;
    if (k == 0) break;
    ++a[k];
    max_prefix[k] = std::max(max_prefix[k - 1], a[k]);
    for (int t = k + 1; t < n; ++t) {
      a[t] = 0;
      max_prefix[t] = max_prefix[k];
    }
  }
  sort_partitions(out);
  return out;
}

std::vector<SetPartition> enumerate_noncrossing(int n) {
  check_range("enumerate_noncrossing", n, 1, SetPartition::kMaxN);
  NcGenerator gen;
  std::vector<SetPartition> out;
  for (const auto& blocks : gen.of(1, n)) out.push_back(SetPartition::from_masks(n, blocks));
  sort_partitions(out);
  return out;
}

PartitionPoset build_pi(int n) {
  check_range("build_pi", n, 1, kMaxPiN);
  return PartitionPoset::from_dref(n, enumerate_partitions(n));
}

PartitionPoset build_nc(int n) {
  check_range("build_nc", n, 1, kMaxNcN);
  return PartitionPoset::from_dref(n, enumerate_noncrossing(n));
}

bool in_excluded_l1(const SetPartition& x) {
  const int n = x.n();
  return x.has_block(element_bit(n - 1) | element_bit(n));
}

bool in_excluded_l2(const SetPartition& x) {
  const int n = x.n();
  return x.is_singleton(n) && x.same_block(1, n - 1);
}

bool is_pe_member(const SetPartition& x) {
  if (x.n() < 3) throw PartitionError("PE membership needs n >= 3");
  if (!is_noncrossing(x)) throw PartitionError("PE membership of crossing partition " + x.to_string());
  return !in_excluded_l1(x) && !in_excluded_l2(x);
}

std::vector<SetPartition> enumerate_pe(int n) {
  check_range("enumerate_pe", n, 3, SetPartition::kMaxN);
  auto nc = enumerate_noncrossing(n);
  std::erase_if(nc, [](const SetPartition& x) { return !is_pe_member(x); });
  return nc;
}

PartitionPoset build_pe_dref(int n) {
  check_range("build_pe_dref", n, 3, kMaxPeN);
  return PartitionPoset::from_dref(n, enumerate_pe(n));
}

namespace {

void require_pe(const SetPartition& x, const char* op) {
  if (!is_pe_member(x)) {
    throw PartitionError(std::string(op) + ": " + x.to_string() + " is not in PE_n");
  }
}

}  // namespace

PeOpResult pe_meet_traced(const SetPartition& x, const SetPartition& y) {
  require_pe(x, "pe_meet");
  require_pe(y, "pe_meet");
  const int n = x.n();
  SetPartition w = nc_meet(x, y);
  PeOpResult out{w, false};
  if (in_excluded_l1(w)) {
    std::vector<Mask> blocks;
    for (Mask b : w.block_masks()) {
      if (b == (element_bit(n - 1) | element_bit(n))) {
        blocks.push_back(element_bit(n - 1));
        blocks.push_back(element_bit(n));
      } else {
        blocks.push_back(b);
      }
    }
    out = {SetPartition::from_masks(n, blocks), true};
  } else if (in_excluded_l2(w)) {
    throw std::logic_error("pe_meet: NC meet of " + x.to_string() + " and " + y.to_string() +
                           " has {n} singleton with 1 ~ n-1, which cannot happen");
  }
  if (!is_pe_member(out.value)) throw std::logic_error("pe_meet left PE_n");
  return out;
}

PeOpResult pe_join_traced(const SetPartition& x, const SetPartition& y) {
  require_pe(x, "pe_join");
  require_pe(y, "pe_join");
  const int n = x.n();
  SetPartition w = nc_join(x, y);
  PeOpResult out{w, false};
  if (in_excluded_l1(w)) {
    throw std::logic_error("pe_join: NC join of " + x.to_string() + " and " + y.to_string() +
                           " has block {n-1,n}, which cannot happen");
  } else if (in_excluded_l2(w)) {
    std::vector<Mask> blocks;
    const Mask with_one = w.block_of(1);
    for (Mask b : w.block_masks()) {
      if (b == with_one) {
        blocks.push_back(b | element_bit(n));
      } else if (b != element_bit(n)) {
        blocks.push_back(b);
      }
    }
    out = {SetPartition::from_masks(n, blocks), true};
  }
  if (!is_pe_member(out.value)) throw std::logic_error("pe_join left PE_n");
  return out;
}

SetPartition pe_meet(const SetPartition& x, const SetPartition& y) { return pe_meet_traced(x, y).value; }
SetPartition pe_join(const SetPartition& x, const SetPartition& y) { return pe_join_traced(x, y).value; }

DistinguishedChain distinguished_chain(int n) {
  check_range("distinguished_chain", n, 1, SetPartition::kMaxN);
  DistinguishedChain chain{n, {}};
  for (int i = 1; i <= n; ++i) {
    std::vector<Mask> blocks;
    const Mask big = span_mask(1, i - 1) | element_bit(n);
    blocks.push_back(big);
    for (int k = 1; k <= n; ++k) {
      if (!(big & element_bit(k))) blocks.push_back(element_bit(k));
    }
    chain.elements.push_back(SetPartition::from_masks(n, blocks));
  }
  return chain;
}

Chain DistinguishedChain::indices_in(const PartitionPoset& pp) const {
  Chain out;
  out.reserve(elements.size());
  for (const auto& x : elements) out.push_back(pp.index_of(x));
  return out;
}

PartitionPoset build_by_kind(const std::string& kind, int n) {
  if (kind == "pi") return build_pi(n);
  if (kind == "nc") return build_nc(n);
  if (kind == "pe-dref") return build_pe_dref(n);
  throw std::invalid_argument("unknown poset kind '" + kind + "'");
}

}  // namespace ncposet
