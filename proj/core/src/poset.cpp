#include "ncposet/poset.hpp"

#include <algorithm>
#include <numeric>

namespace ncposet {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* where) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw PosetError(std::string("64-bit overflow in ") + where);
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* where) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw PosetError(std::string("64-bit overflow in ") + where);
  }
  return out;
}

void require_bounded(const FinitePoset& p, const char* what) {
  if (!p.is_bounded()) throw PosetError(std::string(what) + " requires a bounded poset");
}

}  // namespace

FinitePoset FinitePoset::from_order_oracle(std::vector<std::string> keys,
                                           const std::function<bool(std::size_t, std::size_t)>& leq) {
  FinitePoset p;
  const std::size_t n = keys.size();
  p.keys_ = std::move(keys);
  p.up_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (leq(i, j)) p.up_[i].set(j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.up_[i][i]) throw OrderViolation("relation is not reflexive at " + p.keys_[i], {i, i, i});
    for (std::size_t j = p.up_[i].find_next(i); j != Bitset::npos; j = p.up_[i].find_next(j)) {
      if (p.up_[j][i]) {
        throw OrderViolation("relation is not antisymmetric: " + p.keys_[i] + ", " + p.keys_[j],
                             {i, j, j});
      }
    }
  }
  // Transitivity: up(j) must be contained in up(i) whenever i <= j.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = p.up_[i].find_first(); j != Bitset::npos; j = p.up_[i].find_next(j)) {
      if (!p.up_[j].is_subset_of(p.up_[i])) {
        Bitset missing = p.up_[j];
        missing.subtract(p.up_[i]);
        const std::size_t k = missing.find_first();
        throw OrderViolation("relation is not transitive: " + p.keys_[i] + " <= " + p.keys_[j] +
                                 " <= " + p.keys_[k],
                             {i, j, k});
      }
    }
  }
  p.finish_from_matrix();
  return p;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> keys,
                                     std::span<const std::pair<std::size_t, std::size_t>> covers) {
  const std::size_t n = keys.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw PosetError("cover index out of range");
    if (a == b) throw PosetError("cover relation from an element to itself");
    out[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t w : out[order[head]]) {
      if (--indegree[w] == 0) order.push_back(w);
    }
  }
  if (order.size() != n) throw PosetError("cover relations contain a cycle");

  FinitePoset p;
  p.keys_ = std::move(keys);
  p.up_.assign(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    p.up_[*it].set(*it);
    for (std::size_t w : out[*it]) p.up_[*it] |= p.up_[w];
  }
  p.finish_from_matrix();

  std::vector<std::pair<std::size_t, std::size_t>> given(covers.begin(), covers.end());
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != p.cover_relations()) {
    throw PosetError("cover list is not a transitive reduction");
  }
  return p;
}

void FinitePoset::finish_from_matrix() {
  const std::size_t n = keys_.size();
  index_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(keys_[i], i).second) throw PosetError("duplicate element key " + keys_[i]);
  }

  down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    up_[i].for_each([&](std::size_t j) { down_[j].set(i); });
  }

  std::vector<std::size_t> down_count(n);
  for (std::size_t i = 0; i < n; ++i) down_count[i] = down_[i].count();
  linear_.resize(n);
  std::iota(linear_.begin(), linear_.end(), std::size_t{0});
  std::stable_sort(linear_.begin(), linear_.end(),
                   [&](std::size_t a, std::size_t b) { return down_count[a] < down_count[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[linear_[k]] = k;

  // Scanning candidates in a linear extension, the first surviving element
  // above x is a cover; everything above it is then discarded.
  upper_.assign(n, {});
  lower_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    Bitset candidates = up_[x];
    candidates.reset(x);
    for (std::size_t k = position[x] + 1; k < n && !candidates.none(); ++k) {
      const std::size_t z = linear_[k];
      if (!candidates[z]) continue;
      upper_[x].push_back(z);
      candidates.subtract(up_[z]);
    }
    std::sort(upper_[x].begin(), upper_[x].end());
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z : upper_[x]) lower_[z].push_back(x);
  }

  bottom_.reset();
  top_.reset();
  for (std::size_t i = 0; i < n; ++i) {
    if (up_[i].count() == n) bottom_ = i;
    if (down_[i].count() == n) top_ = i;
  }
}

std::optional<std::size_t> FinitePoset::index_of(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FinitePoset::is_cover(std::size_t i, std::size_t j) const {
  return std::binary_search(upper_[i].begin(), upper_[i].end(), j);
}

std::size_t FinitePoset::num_covers() const {
  std::size_t c = 0;
  for (const auto& u : upper_) c += u.size();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(num_covers());
  for (std::size_t i = 0; i < upper_.size(); ++i) {
    for (std::size_t j : upper_[i]) out.emplace_back(i, j);
  }
  return out;
}

FinitePoset FinitePoset::induced(std::span<const std::size_t> subset) const {
  std::vector<std::string> keys;
  keys.reserve(subset.size());
  for (std::size_t i : subset) keys.push_back(keys_[i]);
  std::vector<std::size_t> ids(subset.begin(), subset.end());
  return from_order_oracle(std::move(keys),
                           [&](std::size_t a, std::size_t b) { return leq(ids[a], ids[b]); });
}

std::vector<std::pair<std::size_t, std::size_t>> naive_transitive_reduction(const FinitePoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      bool between = false;
      for (std::size_t z = 0; z < n && !between; ++z) between = p.less(x, z) && p.less(z, y);
      if (!between) out.emplace_back(x, y);
    }
  }
  return out;
}

LatticeVerdict is_lattice(const FinitePoset& p) {
  const std::size_t n = p.size();
  LatticeVerdict verdict;
  if (n == 0) {
    verdict.reason = "empty poset";
    return verdict;
  }
  // Position in the linear extension: the join of a, b must be the earliest
  // upper bound, the meet the latest lower bound.
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[p.linear_extension()[k]] = k;

  bool index_sorted = true;
  for (std::size_t i = 0; i < n && index_sorted; ++i) index_sorted = p.up_set(i).find_first() == i;

  auto earliest = [&](const Bitset& s) {
    if (index_sorted) return s.find_first();
    std::size_t best = Bitset::npos;
    s.for_each([&](std::size_t v) {
      if (best == Bitset::npos || position[v] < position[best]) best = v;
    });
    return best;
  };
  auto latest = [&](const Bitset& s) {
    if (index_sorted) return s.find_last();
    std::size_t best = Bitset::npos;
    s.for_each([&](std::size_t v) {
      if (best == Bitset::npos || position[v] > position[best]) best = v;
    });
    return best;
  };

  std::vector<std::uint32_t> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Bitset upper = p.up_set(a) & p.up_set(b);
      const std::size_t u = earliest(upper);
      if (u == Bitset::npos || !upper.is_subset_of(p.up_set(u))) {
        verdict.witness = {a, b};
        verdict.reason = "no least upper bound for " + p.key(a) + " and " + p.key(b);
        return verdict;
      }
      const Bitset lower = p.down_set(a) & p.down_set(b);
      const std::size_t m = latest(lower);
      if (m == Bitset::npos || !lower.is_subset_of(p.down_set(m))) {
        verdict.witness = {a, b};
        verdict.reason = "no greatest lower bound for " + p.key(a) + " and " + p.key(b);
        return verdict;
      }
      join[a * n + b] = join[b * n + a] = static_cast<std::uint32_t>(u);
      meet[a * n + b] = meet[b * n + a] = static_cast<std::uint32_t>(m);
    }
  }
  verdict.is_lattice = true;
  verdict.ops.emplace(n, std::move(meet), std::move(join));
  return verdict;
}

std::vector<Chain> maximal_chains(const FinitePoset& p) {
  require_bounded(p, "maximal_chains");
  return saturated_chains(p, *p.bottom(), *p.top());
}

std::vector<Chain> saturated_chains(const FinitePoset& p, std::size_t x, std::size_t y) {
  std::vector<Chain> out;
  if (!p.leq(x, y)) return out;
  Chain current{x};
  // Explicit stack of (element, next cover slot).
  std::vector<std::pair<std::size_t, std::size_t>> stack{{x, 0}};
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    if (v == y) {
      out.push_back(current);
      stack.pop_back();
      current.pop_back();
      continue;
    }
    const auto& covers = p.upper_covers(v);
    while (slot < covers.size() && !p.leq(covers[slot], y)) ++slot;
    if (slot == covers.size()) {
      stack.pop_back();
      current.pop_back();
      continue;
    }
    const std::size_t next = covers[slot++];
    current.push_back(next);
    stack.emplace_back(next, 0);
  }
  return out;
}

std::uint64_t count_maximal_chains(const FinitePoset& p) {
  require_bounded(p, "count_maximal_chains");
  const auto& order = p.linear_extension();
  std::vector<std::uint64_t> count(p.size(), 0);
  count[*p.top()] = 1;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t c : p.upper_covers(*it)) {
      count[*it] = checked_add(count[*it], count[c], "count_maximal_chains");
    }
  }
  return count[*p.bottom()];
}

GradedVerdict is_graded(const FinitePoset& p) {
  require_bounded(p, "is_graded");
  const std::size_t n = p.size();
  std::vector<int> shortest(n, 0), longest(n, 0);
  for (std::size_t v : p.linear_extension()) {
    const auto& below = p.lower_covers(v);
    if (below.empty()) continue;
    int lo = -1, hi = -1;
    for (std::size_t w : below) {
      lo = lo < 0 ? shortest[w] + 1 : std::min(lo, shortest[w] + 1);
      hi = std::max(hi, longest[w] + 1);
    }
    shortest[v] = lo;
    longest[v] = hi;
  }
  GradedVerdict verdict;
  verdict.graded = shortest[*p.top()] == longest[*p.top()];
  verdict.height = longest[*p.top()];
  verdict.rank = std::move(shortest);
  return verdict;
}

std::vector<std::int64_t> moebius_to(const FinitePoset& p, std::size_t y) {
  std::vector<std::int64_t> mu(p.size(), 0);
  mu[y] = 1;
  const Bitset& below_y = p.down_set(y);
  const auto& order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t z = *it;
    if (z == y || !below_y[z]) continue;
    std::int64_t sum = 0;
    const Bitset between = p.up_set(z) & below_y;
    between.for_each([&](std::size_t w) {
      if (w != z) sum = checked_add(sum, mu[w], "moebius");
    });
    mu[z] = -sum;
  }
  return mu;
}

MoebiusTable moebius(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::int64_t> values(n * n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    const auto column = moebius_to(p, y);
    for (std::size_t x = 0; x < n; ++x) values[x * n + y] = column[x];
  }
  return MoebiusTable(n, std::move(values));
}

std::int64_t moebius_value(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y)) return 0;
  return moebius_to(p, y)[x];
}

std::int64_t moebius_bottom_top(const FinitePoset& p) {
  require_bounded(p, "moebius_bottom_top");
  return moebius_value(p, *p.bottom(), *p.top());
}

bool is_modular_pair(const FinitePoset& p, const LatticeOps& ops, std::size_t x, std::size_t z) {
  const std::size_t x_meet_z = ops.meet(x, z);
  bool ok = true;
  const Bitset& below = p.down_set(z);
  for (std::size_t y = below.find_first(); y != Bitset::npos && ok; y = below.find_next(y)) {
    ok = ops.meet(ops.join(y, x), z) == ops.join(y, x_meet_z);
  }
  return ok;
}

bool is_left_modular_element(const FinitePoset& p, const LatticeOps& ops, std::size_t x) {
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (!is_modular_pair(p, ops, x, z)) return false;
  }
  return true;
}

bool is_maximal_chain(const FinitePoset& p, std::span<const std::size_t> chain) {
  if (chain.empty() || !p.is_bounded()) return false;
  if (chain.front() != *p.bottom() || chain.back() != *p.top()) return false;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!p.is_cover(chain[k], chain[k + 1])) return false;
  }
  return true;
}

bool is_left_modular_chain(const FinitePoset& p, const LatticeOps& ops,
                           std::span<const std::size_t> chain) {
  if (!is_maximal_chain(p, chain)) throw PosetError("is_left_modular_chain: chain is not maximal");
  return std::all_of(chain.begin(), chain.end(),
                     [&](std::size_t x) { return is_left_modular_element(p, ops, x); });
}

FinitePoset direct_product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t m = q.size();
  std::vector<std::string> keys;
  keys.reserve(p.size() * m);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) keys.push_back("(" + p.key(i) + "," + q.key(j) + ")");
  }
  return FinitePoset::from_order_oracle(std::move(keys), [&](std::size_t a, std::size_t b) {
    return p.leq(a / m, b / m) && q.leq(a % m, b % m);
  });
}

FinitePoset chain_poset(std::size_t length) {
  std::vector<std::string> keys;
  for (std::size_t k = 0; k <= length; ++k) keys.push_back(std::to_string(k));
  return FinitePoset::from_order_oracle(std::move(keys),
                                        [](std::size_t a, std::size_t b) { return a <= b; });
}

}  // namespace ncposet
