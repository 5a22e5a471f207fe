#include "ncposet/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ncposet {

namespace {

using Mask = SetPartition::Mask;

Mask ground_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

void check_n(int n) {
  if (n < 1 || n > SetPartition::kMaxN) {
    throw PartitionError("ground set size " + std::to_string(n) + " outside [1, " +
                         std::to_string(SetPartition::kMaxN) + "]");
  }
}

void check_same_n(const SetPartition& x, const SetPartition& y) {
  if (x.n() != y.n()) {
    throw PartitionError("partitions over different ground sets (" + std::to_string(x.n()) +
                         " vs " + std::to_string(y.n()) + ")");
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

SetPartition::SetPartition(int n, std::vector<Mask> blocks) : n_(n), blocks_(std::move(blocks)) {
  std::sort(blocks_.begin(), blocks_.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Mask m = blocks_[b]; m != 0; m &= m - 1) {
      block_id_[std::countr_zero(m)] = static_cast<std::uint8_t>(b);
    }
  }
}

SetPartition SetPartition::discrete(int n) {
  check_n(n);
  std::vector<Mask> blocks(n);
  for (int i = 1; i <= n; ++i) blocks[i - 1] = element_bit(i);
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::full(int n) {
  check_n(n);
  return SetPartition(n, {ground_mask(n)});
}

SetPartition SetPartition::atom(int n, int i, int j) {
  check_n(n);
  if (i < 1 || j > n || i >= j) {
    throw PartitionError("atom a_{" + std::to_string(i) + "," + std::to_string(j) +
                         "} invalid for n=" + std::to_string(n));
  }
  std::vector<Mask> blocks;
  blocks.push_back(element_bit(i) | element_bit(j));
  for (int k = 1; k <= n; ++k) {
    if (k != i && k != j) blocks.push_back(element_bit(k));
  }
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_masks(int n, std::span<const Mask> masks) {
  check_n(n);
  Mask seen = 0;
  for (Mask m : masks) {
    if (m == 0) throw PartitionError("empty block");
    if (m & ~ground_mask(n)) throw PartitionError("block element outside [1, n]");
    if (m & seen) throw PartitionError("blocks are not disjoint");
    seen |= m;
  }
  if (seen != ground_mask(n)) throw PartitionError("blocks do not cover [1, n]");
  return SetPartition(n, std::vector<Mask>(masks.begin(), masks.end()));
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  check_n(n);
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    Mask m = 0;
    for (int e : block) {
      if (e < 1 || e > n) throw PartitionError("element " + std::to_string(e) + " outside [1, n]");
      if (m & element_bit(e)) throw PartitionError("repeated element " + std::to_string(e));
      m |= element_bit(e);
    }
    masks.push_back(m);
  }
  return from_masks(n, masks);
}

SetPartition SetPartition::parse(std::string_view text) {
  const bool commas = text.find(',') != std::string_view::npos;
  std::vector<std::vector<int>> blocks(1);
  int count = 0;
  bool pending_comma = false;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw PartitionError(what + " in \"" + std::string(text) + "\"");
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '|' || c == ',') {
      if (blocks.back().empty() || pending_comma) fail(c == '|' ? "empty block" : "misplaced ','");
      if (c == '|') {
        blocks.emplace_back();
      } else {
        pending_comma = true;
      }
      ++pos;
    } else if (c >= '0' && c <= '9') {
      int value = 0;
      if (commas) {
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          value = value * 10 + (text[pos] - '0');
          if (value > kMaxN) fail("element too large");
          ++pos;
        }
      } else {
        value = c - '0';
        ++pos;
      }
      blocks.back().push_back(value);
      ++count;
      pending_comma = false;
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
  }
  if (blocks.back().empty() || pending_comma) fail("truncated partition");
  return from_blocks(count == 0 ? 0 : count, blocks);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks_.size());
  for (Mask m : blocks_) {
    auto& block = out.emplace_back();
    for (; m != 0; m &= m - 1) block.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

void SetPartition::check_index(int i) const {
  if (i < 1 || i > n_) {
    throw PartitionError("index " + std::to_string(i) + " outside [1, " + std::to_string(n_) + "]");
  }
}

int SetPartition::block_index(int i) const {
  check_index(i);
  return block_id_[i - 1];
}

bool SetPartition::same_block(int i, int j) const {
  check_index(i);
  check_index(j);
  return block_id_[i - 1] == block_id_[j - 1];
}

bool SetPartition::is_singleton(int i) const { return block_of(i) == element_bit(i); }

bool SetPartition::has_block(Mask block) const {
  if (block == 0) return false;
  const int first = std::countr_zero(block) + 1;
  return first <= n_ && block_of(first) == block;
}

std::string SetPartition::to_string() const {
  const bool commas = n_ >= 10;
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += '|';
    bool first = true;
    for (Mask m = blocks_[b]; m != 0; m &= m - 1) {
      if (!first && commas) out += ',';
      out += std::to_string(std::countr_zero(m) + 1);
      first = false;
    }
  }
  return out;
}

bool same_block(const SetPartition& x, int i, int j) { return x.same_block(i, j); }

bool leq_dref(const SetPartition& x, const SetPartition& y) {
  check_same_n(x, y);
  for (Mask b : x.block_masks()) {
    if ((b & ~y.block_of(std::countr_zero(b) + 1)) != 0) return false;
  }
  return true;
}

SetPartition meet_partition(const SetPartition& x, const SetPartition& y) {
  check_same_n(x, y);
  std::vector<Mask> blocks;
  for (Mask a : x.block_masks()) {
    for (Mask b : y.block_masks()) {
      if (a & b) blocks.push_back(a & b);
    }
  }
  return SetPartition::from_masks(x.n(), blocks);
}

SetPartition join_partition(const SetPartition& x, const SetPartition& y) {
  check_same_n(x, y);
  const int n = x.n();
  UnionFind uf(n);
  for (const SetPartition* p : {&x, &y}) {
    for (Mask b : p->block_masks()) {
      const int first = std::countr_zero(b);
      for (Mask m = b & (b - 1); m != 0; m &= m - 1) uf.unite(first, std::countr_zero(m));
    }
  }
  std::vector<Mask> by_root(n, 0);
  for (int v = 0; v < n; ++v) by_root[uf.find(v)] |= Mask{1} << v;
  std::vector<Mask> blocks;
  for (Mask m : by_root) {
    if (m) blocks.push_back(m);
  }
  return SetPartition::from_masks(n, blocks);
}

bool blocks_cross(Mask a, Mask b) {
  // Walk the elements of a|b in increasing order; a crossing is exactly an
  // alternation pattern with at least four runs.
  Mask both = a | b;
  int runs = 0;
  int last = -1;
  for (; both != 0; both &= both - 1) {
    const int side = (a >> std::countr_zero(both)) & 1;
    if (side != last) {
      ++runs;
      last = side;
      if (runs >= 4) return true;
    }
  }
  return false;
}

bool is_noncrossing(const SetPartition& x) {
  const auto blocks = x.block_masks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks_cross(blocks[i], blocks[j])) return false;
    }
  }
  return true;
}

SetPartition nc_closure(const SetPartition& x) {
  std::vector<Mask> blocks(x.block_masks().begin(), x.block_masks().end());
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < blocks.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        if (blocks_cross(blocks[i], blocks[j])) {
          blocks[i] |= blocks[j];
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
          break;
        }
      }
    }
  }
  return SetPartition::from_masks(x.n(), blocks);
}

SetPartition nc_join(const SetPartition& x, const SetPartition& y) {
  if (!is_noncrossing(x) || !is_noncrossing(y)) {
    throw PartitionError("nc_join of crossing partition");
  }
  return nc_closure(join_partition(x, y));
}

SetPartition nc_meet(const SetPartition& x, const SetPartition& y) {
  if (!is_noncrossing(x) || !is_noncrossing(y)) {
    throw PartitionError("nc_meet of crossing partition");
  }
  return meet_partition(x, y);
}

std::size_t SetPartitionHash::operator()(const SetPartition& x) const noexcept {
  std::size_t h = std::hash<int>{}(x.n());
  for (Mask m : x.block_masks()) h = h * 1000003u ^ std::hash<Mask>{}(m);
  return h;
}

}  // namespace ncposet
