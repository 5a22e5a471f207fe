#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ncposet/ncposet.hpp"

namespace ncposet::cli {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_cap(const std::string& what, int n, Cap cap) {
  if (n < cap.lo || n > cap.hi) {
    throw UsageError(what + ": n=" + std::to_string(n) + " is outside the supported range " +
                     std::to_string(cap.lo) + " <= n <= " + std::to_string(cap.hi));
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  out << text;
}

PartitionPoset load(const std::string& kind, int n) {
  if (kind == "pe-pchn") return build_pe_pchn(n);
  return build_by_kind(kind, n);
}

std::string chain_text(const PartitionPoset& pp, const Chain& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += " < ";
    out += pp[c[k]].to_string();
  }
  return out;
}

std::string words_text(const std::vector<int>& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(w[k]);
  }
  return out;
}

/// Left-modular labeling from the distinguished chain; on (PE_n, <=pchn) it
/// is inherited from (PE_n, <=dref).
EdgeLabeling leftmod_for(const std::string& kind, const PartitionPoset& pp) {
  if (kind == "pe-pchn") {
    const PartitionPoset dref = build_pe_dref(pp.n);
    return pe_dref_labeling(dref).restrict_to(dref.poset, pp.poset);
  }
  return pe_dref_labeling(pp);
}

EdgeLabeling labeling_for(const std::string& kind, const PartitionPoset& pp, const std::string& scheme) {
  if (scheme == "leftmod") return leftmod_for(kind, pp);
  if (scheme == "parking") return parking_labeling(pp);
  if (scheme == "standard") return standard_nc_labeling(pp);
  throw UsageError("unknown labeling scheme '" + scheme + "'");
}

Json witness_json(const PartitionPoset& pp, const EdgeLabeling& lab, const ElWitness& w) {
  Json j;
  j["interval"] = {pp[w.bottom].to_string(), pp[w.top].to_string()};
  j["reason"] = w.reason;
  auto chains = Json::array();
  for (const auto& c : w.chains) {
    chains.push_back({{"chain", chain_text(pp, c)}, {"labels", words_text(lab.word(c))}});
  }
  j["chains"] = std::move(chains);
  return j;
}

bool is_catalan_product(std::int64_t m) {
  if (m == 1) return true;
  for (std::int64_t k = 2;; ++k) {
    const std::int64_t c = catalan(k);
    if (c > m) return false;
    if (m % c == 0 && is_catalan_product(m / c)) return true;
  }
}

}  // namespace

Cap build_cap(const std::string& kind) {
  if (kind == "pi") return {1, kMaxPiN};
  if (kind == "nc") return {1, kMaxNcN};
  if (kind == "pe-dref") return {3, kMaxPeN};
  if (kind == "pe-pchn") return {3, kMaxChainN};
  throw UsageError("unknown poset kind '" + kind + "'");
}

Cap verify_cap(const std::string& kind) {
  if (kind == "pi") return {1, 6};
  if (kind == "nc") return {1, 7};
  if (kind == "pe-dref" || kind == "pe-pchn") return {3, 7};
  throw UsageError("unknown poset kind '" + kind + "'");
}

Cap mobius_cap(const std::string& target, const std::string& method) {
  const bool pe = target != "nc";
  const int lo = pe ? 3 : 1;
  int hi = 0;
  if (method == "recursion") {
    hi = target == "nc" ? kMaxNcN : target == "pe-dref" ? kMaxPeN : kMaxChainN;
  } else if (method == "nbb") {
    hi = kMaxNbbN;
  } else if (method == "chains" || method == "all") {
    hi = 8;
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  if (target != "nc" && target != "pe-dref" && target != "pe-pchn") {
    throw UsageError("unknown target '" + target + "'");
  }
  return {lo, hi};
}

Cap label_cap(const std::string& kind) { return verify_cap(kind); }

std::string caps_help(const std::string& command) {
  std::ostringstream os;
  os << "Size caps (n):";
  if (command == "build") {
    for (const char* k : {"pi", "nc", "pe-dref", "pe-pchn"}) {
      os << " " << k << " " << build_cap(k).lo << ".." << build_cap(k).hi << ";";
    }
  } else if (command == "verify" || command == "label") {
    for (const char* k : {"pi", "nc", "pe-dref", "pe-pchn"}) {
      os << " " << k << " " << verify_cap(k).lo << ".." << verify_cap(k).hi << ";";
    }
  } else if (command == "mobius") {
    os << " recursion nc 1.." << kMaxNcN << ", pe-dref 3.." << kMaxPeN << ", pe-pchn 3.." << kMaxChainN
       << "; nbb 1.." << kMaxNbbN << " (not for pe-pchn); chains and all up to 8.";
  } else if (command == "nbb") {
    os << " top element 1.." << kNbbCap.hi << " (pe needs n >= 3); --element 1.." << kNbbElementCap.hi << ".";
  } else if (command == "chains") {
    os << " " << kChainsCap.lo << ".." << kChainsCap.hi << "; --count-only up to " << kMaxNcN << ".";
  } else if (command == "probe-intervals") {
    os << " " << kProbeCap.lo << ".." << kProbeCap.hi << ".";
  }
  return os.str();
}

RunReport cmd_build(const BuildOptions& o) {
  check_cap("build " + o.kind, o.n, build_cap(o.kind));
  RunReport r;
  Stopwatch sw;
  const PartitionPoset pp = load(o.kind, o.n);
  r.timings["build"] = sw.seconds();
  r.counts["elements"] = pp.size();
  r.counts["covers"] = pp.poset.num_covers();
  const GradedVerdict g = is_graded(pp.poset);
  r.counts["graded"] = g.graded;
  if (g.graded) r.counts["rank"] = g.height;
  r.counts["maximal_chains"] = count_maximal_chains(pp.poset);
  if (o.include_poset) r.data["poset"] = Json::parse(poset_to_json(pp.poset));
  if (!o.dot_file.empty()) write_file(o.dot_file, poset_to_dot(pp.poset, nullptr, "hasse"));
  return r;
}

RunReport cmd_verify(const VerifyOptions& o) {
  check_cap("verify " + o.kind, o.n, verify_cap(o.kind));
  static const std::set<std::string> suites{"lattice", "graded", "leftmod", "el", "sn-el", "all"};
  if (!suites.count(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");
  const auto want = [&](const char* s) { return o.suite == "all" || o.suite == s; };
  const Json params = {{"kind", o.kind}, {"n", o.n}};

  RunReport r;
  Stopwatch sw;
  const PartitionPoset pp = load(o.kind, o.n);
  r.timings["build"] = sw.seconds();
  r.counts["elements"] = pp.size();
  r.counts["covers"] = pp.poset.num_covers();

  const LatticeVerdict lv = is_lattice(pp.poset);
  if (want("lattice")) {
    Json d;
    if (!lv.is_lattice && lv.witness) {
      d["witness"] = {pp[lv.witness->first].to_string(), pp[lv.witness->second].to_string()};
      d["reason"] = lv.reason;
    }
    r.add("lattice", params, lv.is_lattice, d);
  }
  const GradedVerdict g = is_graded(pp.poset);
  if (want("graded")) {
    Json d;
    if (g.graded) d["rank"] = g.height;
    r.add("graded", params, g.graded, d);
  }
  bool leftmod = false;
  if (want("leftmod")) {
    Json d;
    if (lv.is_lattice) {
      leftmod = is_left_modular_chain(pp.poset, *lv.ops, distinguished_chain(o.n).indices_in(pp));
    } else {
      d["reason"] = "not a lattice";
    }
    r.add("left-modular-chain", params, leftmod, d);
  }
  if (o.suite == "all") r.add("supersolvable", params, g.graded && leftmod, {{"route", "graded and left-modular chain"}});
  r.timings["structure"] = sw.seconds();

  if (want("el") || want("sn-el")) {
    if (o.kind != "pe-pchn" && !lv.is_lattice) throw std::logic_error("EL suites need the lattice labeling");
    const EdgeLabeling lab = leftmod_for(o.kind, pp);
    if (want("el")) {
      const ElVerdict v = verify_el(pp.poset, lab);
      Json d{{"intervals_checked", v.intervals_checked}};
      if (v.witness) d["witness"] = witness_json(pp, lab, *v.witness);
      r.add("el", params, v.el, d);

      const auto rising = rising_chains(pp.poset, lab, *pp.poset.bottom(), *pp.poset.top());
      const Chain expected = distinguished_chain(o.n).indices_in(pp);
      Json rd{{"rising_chains", rising.size()}};
      if (rising.size() == 1) rd["chain"] = chain_text(pp, rising.front());
      r.add("rising-chain-is-distinguished", params, rising.size() == 1 && rising.front() == expected, rd);
    }
    if (want("sn-el")) r.add("sn-el", params, verify_sn_el(pp.poset, lab));
    r.timings["labeling"] = sw.seconds();
  }
  return r;
}

RunReport cmd_mobius(const MobiusOptions& o) {
  const Cap cap = mobius_cap(o.target, o.method);
  if (o.target == "pe-pchn" && o.method == "nbb") {
    throw UsageError("method nbb needs a lattice; pe-pchn is not one (use recursion or chains)");
  }
  check_cap("mobius " + o.target + " " + o.method, o.n, cap);
  const bool all = o.method == "all";
  RunReport r;
  Stopwatch sw;
  std::vector<std::pair<std::string, std::int64_t>> values;
  std::optional<PartitionPoset> pp;
  if (all || o.method == "recursion" || o.method == "chains") pp = load(o.target, o.n);
  if (all || o.method == "recursion") {
    values.emplace_back("recursion", moebius_bottom_top(pp->poset));
    r.timings["recursion"] = sw.seconds();
  }
  if ((all && o.target != "pe-pchn") || o.method == "nbb") {
    values.emplace_back("nbb", moebius_via_nbb(o.n, o.target == "nc" ? Ambient::kNC : Ambient::kPE));
    r.timings["nbb"] = sw.seconds();
  }
  if (all || o.method == "chains") {
    const EdgeLabeling lab = leftmod_for(o.target, *pp);
    const auto dec = static_cast<std::int64_t>(count_decreasing_chains(pp->poset, lab));
    const int height = is_graded(pp->poset).height;
    values.emplace_back("chains", height % 2 == 0 ? dec : -dec);
    r.counts["decreasing_chains"] = dec;
    r.timings["chains"] = sw.seconds();
  }
  for (const auto& [method, v] : values) r.counts["mu_" + method] = v;

  const std::int64_t expected = o.target == "nc"        ? nc_moebius_closed(o.n)
                                : o.target == "pe-dref" ? pe_moebius_closed(o.n)
                                                        : 0;
  const Json params = {{"target", o.target}, {"n", o.n}};
  const bool agree = std::all_of(values.begin(), values.end(),
                                 [&](const auto& v) { return v.second == values.front().second; });
  if (values.size() > 1) r.add("methods-agree", params, agree);
  r.add("closed-form", params, agree && values.front().second == expected, {{"expected", expected}});
  return r;
}

RunReport cmd_nbb(const NbbOptions& o) {
  const Ambient ambient = parse_ambient(o.ambient);
  RunReport r;
  Stopwatch sw;
  if (!o.element.empty()) {
    if (ambient != Ambient::kNC) throw UsageError("--element is only supported for the nc ambient");
    const SetPartition x = SetPartition::parse(o.element);
    check_cap("nbb --element", x.n(), kNbbElementCap);
    const auto by_rank = enumerate_nbb_bases_nc_by_rank(x);
    const auto brute = enumerate_nbb_bases_nc_bruteforce(x);
    auto list = Json::array();
    for (const auto& b : by_rank) list.push_back(atom_set_to_string(b));
    r.data["bases"] = std::move(list);
    r.counts["bases_by_rank"] = by_rank.size();
    r.counts["bases_definition"] = brute.size();
    r.add("rank-selection-matches-definition", {{"element", x.to_string()}}, by_rank == brute);
    r.timings["enumerate"] = sw.seconds();
    return r;
  }
  const int lo = ambient == Ambient::kPE ? 3 : kNbbCap.lo;
  check_cap(std::string("nbb ") + ambient_name(ambient), o.n, {lo, kNbbCap.hi});
  const int n = o.n;
  const Json params = {{"ambient", ambient_name(ambient)}, {"n", n}};
  const auto bases = enumerate_nbb_bases_top(n, ambient);
  r.timings["enumerate"] = sw.seconds();
  r.counts["bases"] = bases.size();

  const bool sizes_ok = std::all_of(bases.begin(), bases.end(),
                                    [&](const AtomSet& b) { return static_cast<int>(b.size()) == n - 1; });
  r.add("bases-have-n-1-atoms", params, sizes_ok);
  if (ambient == Ambient::kNC && n >= 2) {
    const bool trees_ok = std::all_of(bases.begin(), bases.end(), [&](const AtomSet& b) {
      const NcTree t = base_to_tree(b, n);
      return t.has_edge(1, n) && t.root_split() > 0;
    });
    r.add("trees-split-at-1n", params, trees_ok);
  }

  auto list = Json::array();
  bool classify = o.classify && n >= 3;
  std::size_t s1 = 0, s2 = 0, rr = 0, kept = 0;
  std::vector<AtomSet> kept_sets;
  for (const auto& b : bases) {
    Json e{{"atoms", atom_set_to_string(b)}};
    if (classify) {
      const BaseClass c = classify_base(b, n);
      s1 += c.in_s1;
      s2 += c.in_s2;
      rr += c.in_r;
      if (c.kind == BaseKind::kKept) {
        ++kept;
        kept_sets.push_back(b);
      }
      e["kind"] = base_kind_name(c.kind);
    }
    list.push_back(std::move(e));
  }
  r.data["bases"] = std::move(list);
  if (classify) {
    r.counts["S1"] = s1;
    r.counts["S2"] = s2;
    r.counts["R"] = rr;
    r.counts["kept"] = kept;
    if (ambient == Ambient::kNC) {
      const auto pe = enumerate_nbb_bases_top(n, Ambient::kPE);
      r.add("kept-equals-pe-bases", params, kept_sets == pe, {{"pe_bases", pe.size()}});
    }
    r.timings["classify"] = sw.seconds();
  }
  std::int64_t mu = 0;
  for (const auto& b : bases) mu += b.size() % 2 == 0 ? 1 : -1;
  r.counts["mu_nbb"] = mu;
  if (!o.trees_dot.empty()) {
    write_file(o.trees_dot, nbb_trees_to_dot(bases, n, classify));
  }
  return r;
}

RunReport cmd_chains(const ChainsOptions& o, std::string& csv) {
  if (o.filter != "none" && o.filter != "avoid-top") throw UsageError("unknown filter '" + o.filter + "'");
  const bool avoid = o.filter == "avoid-top";
  RunReport r;
  Stopwatch sw;
  const Json params = {{"n", o.n}, {"filter", o.filter}};
  if (o.count_only) {
    check_cap("chains --count-only", o.n, {kChainsCap.lo, kMaxNcN});
    const std::uint64_t count = avoid ? count_D(o.n) : count_maximal_chains(build_nc(o.n).poset);
    r.counts["chains"] = count;
    r.timings["count"] = sw.seconds();
    return r;
  }
  check_cap("chains", o.n, kChainsCap);
  const ChainSet cs = avoid ? build_D(o.n) : build_C(o.n);
  std::ostringstream os;
  for (int k = 1; k < o.n; ++k) os << (k > 1 ? "," : "") << "f" << k;
  os << "\n";
  std::set<std::vector<int>> distinct;
  bool all_parking = true;
  for (const auto& c : cs.chains) {
    const auto w = chain_parking_word(cs.nc, c);
    all_parking = all_parking && is_parking_function(w);
    distinct.insert(w);
    os << words_text(w) << "\n";
  }
  csv = os.str();
  r.counts["chains"] = cs.chains.size();
  r.counts["distinct_words"] = distinct.size();
  r.add("words-are-parking-functions", params, all_parking);
  r.add("words-distinct", params, distinct.size() == cs.chains.size());
  r.timings["enumerate"] = sw.seconds();
  return r;
}

RunReport cmd_label(const LabelOptions& o) {
  check_cap("label " + o.kind, o.n, label_cap(o.kind));
  RunReport r;
  Stopwatch sw;
  const PartitionPoset pp = load(o.kind, o.n);
  const EdgeLabeling lab = labeling_for(o.kind, pp, o.scheme);
  const ElVerdict v = verify_el(pp.poset, lab);
  const bool sn = verify_sn_el(pp.poset, lab);
  r.counts["el"] = v.el;
  r.counts["sn_el"] = sn;
  r.counts["decreasing_count"] = count_decreasing_chains(pp.poset, lab);
  Json d{{"intervals_checked", v.intervals_checked}};
  if (v.witness) d["witness"] = witness_json(pp, lab, *v.witness);
  r.add("el", {{"kind", o.kind}, {"n", o.n}, {"scheme", o.scheme}}, v.el, d);
  if (!o.dot_file.empty()) write_file(o.dot_file, poset_to_dot(pp.poset, &lab, "labelled"));
  r.timings["label"] = sw.seconds();
  return r;
}

RunReport cmd_probe_intervals(const ProbeOptions& o) {
  check_cap("probe-intervals", o.n, kProbeCap);
  RunReport r;
  Stopwatch sw;
  // Sizes of [a_{m-2,m-1}, 1] in PE_m.
  std::vector<std::int64_t> special{1};
  auto sizes = Json::object();
  for (int m = 4; m <= o.n; ++m) {
    std::int64_t c = 0;
    for (const auto& x : enumerate_pe(m)) c += x.same_block(m - 2, m - 1);
    special.push_back(c);
    sizes[std::to_string(m)] = c;
  }
  r.data["special_interval_sizes"] = sizes;

  const PartitionPoset pe = build_pe_dref(o.n);
  const auto& p = pe.poset;
  std::size_t total = 0, matching = 0;
  std::map<std::int64_t, std::size_t> unexplained;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = p.up_set(x).find_first(); y != Bitset::npos; y = p.up_set(x).find_next(y)) {
      if (x == y || (x == *p.bottom() && y == *p.top())) continue;
      ++total;
      const auto size = static_cast<std::int64_t>((p.up_set(x) & p.down_set(y)).count());
      const bool ok = std::any_of(special.begin(), special.end(),
                                  [&](std::int64_t s) { return size % s == 0 && is_catalan_product(size / s); });
      if (ok) {
        ++matching;
      } else {
        ++unexplained[size];
      }
    }
  }
  r.counts["proper_intervals"] = total;
  r.counts["size_factorizes"] = matching;
  auto rest = Json::object();
  for (auto [size, count] : unexplained) rest[std::to_string(size)] = count;
  r.data["unexplained_sizes"] = rest;
  r.data["note"] = "cardinality test only: size = s * (product of Catalan numbers), s a special interval size";
  r.timings["probe"] = sw.seconds();
  return r;
}

}  // namespace ncposet::cli
