#include "ncposet/labeling.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <tuple>

namespace ncposet {

EdgeLabeling::EdgeLabeling(const FinitePoset& p) {
  covers_.resize(p.size());
  labels_.resize(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    covers_[x] = p.upper_covers(x);
    labels_[x].assign(covers_[x].size(), 0);
  }
}

int EdgeLabeling::label(std::size_t x, std::size_t y) const {
  const auto& c = covers_.at(x);
  auto it = std::lower_bound(c.begin(), c.end(), y);
  if (it == c.end() || *it != y) throw LabelingError("label requested for a non-cover pair");
  return labels_[x][static_cast<std::size_t>(it - c.begin())];
}

std::vector<int> EdgeLabeling::word(std::span<const std::size_t> chain) const {
  std::vector<int> w;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) w.push_back(label(chain[k], chain[k + 1]));
  return w;
}

EdgeLabeling EdgeLabeling::restrict_to(const FinitePoset& host, const FinitePoset& sub) const {
  EdgeLabeling out(sub);
  for (std::size_t x = 0; x < sub.size(); ++x) {
    const auto hx = host.index_of(sub.key(x));
    if (!hx) throw LabelingError("restriction: element " + sub.key(x) + " missing from host");
    const auto& covers = sub.upper_covers(x);
    for (std::size_t slot = 0; slot < covers.size(); ++slot) {
      const auto hy = host.index_of(sub.key(covers[slot]));
      if (!hy || !host.is_cover(*hx, *hy)) {
        throw LabelingError("restriction: " + sub.key(x) + " < " + sub.key(covers[slot]) +
                            " is not a cover of the host");
      }
      out.set(x, slot, label(*hx, *hy));
    }
  }
  return out;
}

bool is_rising(std::span<const int> word) {
  return std::adjacent_find(word.begin(), word.end(), [](int a, int b) { return a >= b; }) ==
         word.end();
}

bool is_weakly_decreasing(std::span<const int> word) {
  return std::adjacent_find(word.begin(), word.end(), [](int a, int b) { return a < b; }) ==
         word.end();
}

EdgeLabeling left_modular_labeling(const FinitePoset& p, const LatticeOps& ops,
                                   std::span<const std::size_t> chain) {
  if (!is_maximal_chain(p, chain)) throw LabelingError("left_modular_labeling: chain is not maximal");
  if (!is_left_modular_chain(p, ops, chain)) {
    throw LabelingError("left_modular_labeling: chain is not left-modular");
  }
  EdgeLabeling lab(p);
  for (std::size_t y = 0; y < p.size(); ++y) {
    const auto& covers = p.upper_covers(y);
    for (std::size_t slot = 0; slot < covers.size(); ++slot) {
      const std::size_t z = covers[slot];
      int by_join = -1;
      int by_order = -1;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (by_join < 0 && ops.meet(ops.join(y, chain[i]), z) == z) by_join = static_cast<int>(i);
        if (by_order < 0 && !p.leq(ops.meet(chain[i], z), y)) by_order = static_cast<int>(i);
      }
      if (by_join != by_order || by_join < 1) {
        throw LabelingError("left-modular label formulas disagree on " + p.key(y) + " < " +
                            p.key(z));
      }
      lab.set(y, slot, by_join);
    }
  }
  return lab;
}

int parking_label(const SetPartition& x, const SetPartition& y) {
  std::vector<SetPartition::Mask> gone;
  for (auto b : x.block_masks()) {
    if (!y.has_block(b)) gone.push_back(b);
  }
  if (gone.size() != 2 || y.num_blocks() + 1 != x.num_blocks() || !y.has_block(gone[0] | gone[1])) {
    throw LabelingError("parking label: " + x.to_string() + " -> " + y.to_string() +
                        " is not a two-block merge");
  }
  // Blocks are stored sorted by minimum, so gone[0] is B1.
  const int min_b2 = std::countr_zero(gone[1]) + 1;
  int label = 0;
  for (auto m = gone[0]; m != 0; m &= m - 1) {
    const int j = std::countr_zero(m) + 1;
    if (j < min_b2) label = j;
  }
  return label;
}

EdgeLabeling parking_labeling(const PartitionPoset& pp) {
  EdgeLabeling lab(pp.poset);
  for (std::size_t x = 0; x < pp.size(); ++x) {
    const auto& covers = pp.poset.upper_covers(x);
    for (std::size_t slot = 0; slot < covers.size(); ++slot) {
      lab.set(x, slot, parking_label(pp[x], pp[covers[slot]]));
    }
  }
  return lab;
}

EdgeLabeling standard_nc_labeling(const PartitionPoset& pp) {
  EdgeLabeling lab(pp.poset);
  for (std::size_t x = 0; x < pp.size(); ++x) {
    const auto& covers = pp.poset.upper_covers(x);
    for (std::size_t slot = 0; slot < covers.size(); ++slot) {
      lab.set(x, slot, pp.n - parking_label(pp[x], pp[covers[slot]]));
    }
  }
  return lab;
}

namespace {

struct IntervalStats {
  bool seen = false;
  std::uint64_t rising = 0;
  std::vector<int> best;
  std::uint64_t best_count = 0;
  bool best_rising = false;
  Chain best_chain;
};

}  // namespace

ElVerdict verify_el(const FinitePoset& p, const EdgeLabeling& lab) {
  ElVerdict verdict;
  const std::size_t n = p.size();
  std::vector<IntervalStats> stats(n);
  Chain current;
  std::vector<int> word;
  std::vector<char> rising_prefix;

  for (std::size_t x = 0; x < n; ++x) {
    for (auto& s : stats) s = IntervalStats{};
    current.assign(1, x);
    word.clear();
    rising_prefix.assign(1, 1);
    // Depth-first walk over every saturated chain starting at x; each prefix
    // is a maximal chain of the interval [x, end of prefix].
    std::vector<std::pair<std::size_t, std::size_t>> stack{{x, 0}};
    while (!stack.empty()) {
      auto& [v, slot] = stack.back();
      const auto& covers = p.upper_covers(v);
      if (slot == covers.size()) {
        stack.pop_back();
        current.pop_back();
        if (!word.empty()) word.pop_back();
        rising_prefix.pop_back();
        continue;
      }
      const int label = lab.label_at(v, slot);
      const std::size_t next = covers[slot++];
      const bool rising = rising_prefix.back() && (word.empty() || word.back() < label);
      word.push_back(label);
      current.push_back(next);
      rising_prefix.push_back(rising);

      auto& s = stats[next];
      if (rising) ++s.rising;
      if (!s.seen || std::lexicographical_compare(word.begin(), word.end(), s.best.begin(), s.best.end())) {
        s.seen = true;
        s.best = word;
        s.best_count = 1;
        s.best_rising = rising;
        s.best_chain = current;
      } else if (word == s.best) {
        ++s.best_count;
      }
      stack.emplace_back(next, 0);
    }

    for (std::size_t y = 0; y < n; ++y) {
      const auto& s = stats[y];
      if (!s.seen) continue;
      ++verdict.intervals_checked;
      std::string reason;
      if (s.rising == 0) {
        reason = "no rising maximal chain";
      } else if (s.rising > 1) {
        reason = std::to_string(s.rising) + " rising maximal chains";
      } else if (!s.best_rising) {
        reason = "rising chain is not lexicographically first";
      } else if (s.best_count > 1) {
        reason = "rising chain word is shared by another chain";
      }
      if (!reason.empty()) {
        ElWitness w{x, y, reason, rising_chains(p, lab, x, y)};
        if (!s.best_rising) w.chains.push_back(s.best_chain);
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }
  verdict.el = true;
  return verdict;
}

bool verify_sn_el(const FinitePoset& p, const EdgeLabeling& lab) {
  const GradedVerdict g = is_graded(p);
  if (!g.graded) return false;
  const int r = g.height;
  if (r > 63) throw LabelingError("verify_sn_el: rank too large");
  // DFS over maximal chains tracking the set of labels used so far.
  std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>> stack{{*p.bottom(), 0, 0}};
  while (!stack.empty()) {
    auto& [v, slot, used] = stack.back();
    const auto& covers = p.upper_covers(v);
    if (slot == covers.size()) {
      stack.pop_back();
      continue;
    }
    const int label = lab.label_at(v, slot);
    const std::size_t next = covers[slot++];
    if (label < 1 || label > r) return false;
    const std::uint64_t bit = std::uint64_t{1} << label;
    if (used & bit) return false;
    stack.emplace_back(next, 0, used | bit);
  }
  return true;
}

std::uint64_t count_decreasing_chains(const FinitePoset& p, const EdgeLabeling& lab) {
  if (!p.is_bounded()) throw LabelingError("count_decreasing_chains requires a bounded poset");
  const std::size_t top = *p.top();
  std::uint64_t count = 0;
  // (element, next slot, last label); INT_MAX before the first step.
  std::vector<std::tuple<std::size_t, std::size_t, int>> stack{{*p.bottom(), 0, INT_MAX}};
  while (!stack.empty()) {
    auto& [v, slot, last] = stack.back();
    if (v == top) {
      ++count;
      stack.pop_back();
      continue;
    }
    const auto& covers = p.upper_covers(v);
    if (slot == covers.size()) {
      stack.pop_back();
      continue;
    }
    const int label = lab.label_at(v, slot);
    const std::size_t next = covers[slot++];
    if (label <= last) stack.emplace_back(next, 0, label);
  }
  return count;
}

std::vector<Chain> rising_chains(const FinitePoset& p, const EdgeLabeling& lab, std::size_t x,
                                 std::size_t y) {
  std::vector<Chain> out;
  for (auto& c : saturated_chains(p, x, y)) {
    if (is_rising(lab.word(c))) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ncposet
