#include "ncposet/io.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace ncposet {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string poset_to_json(const FinitePoset& p) {
  nlohmann::json j;
  j["elements"] = p.keys();
  auto covers = nlohmann::json::array();
  for (auto [a, b] : p.cover_relations()) covers.push_back({a, b});
  j["covers"] = std::move(covers);
  return j.dump();
}

FinitePoset poset_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("poset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers") || !j["elements"].is_array() ||
      !j["covers"].is_array()) {
    throw FormatError("poset JSON: expected an object with arrays \"elements\" and \"covers\"");
  }
  std::vector<std::string> keys;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw FormatError("poset JSON: element keys must be strings");
    keys.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned()) {
      throw FormatError("poset JSON: covers must be pairs of non-negative indices");
    }
    const auto a = c[0].get<std::size_t>(), b = c[1].get<std::size_t>();
    if (a >= keys.size() || b >= keys.size()) throw FormatError("poset JSON: cover index out of range");
    covers.emplace_back(a, b);
  }
  return FinitePoset::from_covers(std::move(keys), covers);
}

std::string poset_to_dot(const FinitePoset& p, const EdgeLabeling* labels, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << "  n" << i << " [label=" << quoted(p.key(i)) << "];\n";
  if (p.is_bounded()) {
    const GradedVerdict g = is_graded(p);
    if (g.graded) {
      std::map<int, std::vector<std::size_t>> rows;
      for (std::size_t i = 0; i < p.size(); ++i) rows[g.rank[i]].push_back(i);
      for (const auto& [r, ids] : rows) {
        os << "  { rank=same;";
        for (auto i : ids) os << " n" << i << ";";
        os << " }\n";
      }
    }
  }
  for (auto [a, b] : p.cover_relations()) {
    os << "  n" << a << " -> n" << b;
    if (labels) os << " [label=\"" << labels->label(a, b) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string nbb_trees_to_dot(std::span<const AtomSet> bases, int n, bool classify) {
  std::ostringstream os;
  os << "graph nbb_trees {\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t k = 0; k < bases.size(); ++k) {
    std::string colour = "black";
    if (classify) {
      switch (classify_base(bases[k], n).kind) {
        case BaseKind::kS2: colour = "red"; break;
        case BaseKind::kS1: colour = "blue"; break;
        case BaseKind::kR: colour = "green"; break;
        case BaseKind::kKept: break;
      }
    }
    os << base_to_tree(bases[k], n).to_dot("t" + std::to_string(k), colour);
  }
  os << "}\n";
  return os.str();
}

}  // namespace ncposet
