#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ncposet::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string params_text(const Json& params) {
  std::string out;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!out.empty()) out += ' ';
    out += it.key() + "=" + scalar(it.value());
  }
  return out;
}

}  // namespace

Check& RunReport::add(std::string name, Json params, bool pass, Json detail) {
  checks.push_back({std::move(name), std::move(params), pass, std::move(detail)});
  return checks.back();
}

bool RunReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json RunReport::to_json(bool with_timings) const {
  Json j;
  j["command"] = command;
  auto arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["params"] = c.params;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["counts"] = counts;
  if (!data.empty()) j["data"] = data;
  if (with_timings) j["timings_s"] = timings;
  j["ok"] = all_pass();
  return j;
}

std::string RunReport::to_text(bool with_timings) const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  if (!checks.empty()) {
    std::size_t width = 5;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    os << "\n";
    for (const auto& c : checks) {
      os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(static_cast<int>(width)) << c.name
         << "  " << params_text(c.params) << "\n";
      for (auto it = c.detail.begin(); it != c.detail.end(); ++it) {
        if (!it.value().is_object()) {
          os << "          " << it.key() << ": " << scalar(it.value()) << "\n";
          continue;
        }
        for (auto sub = it.value().begin(); sub != it.value().end(); ++sub) {
          os << "          " << it.key() << "." << sub.key() << ": " << scalar(sub.value()) << "\n";
        }
      }
    }
  }
  if (!counts.empty()) {
    os << "\ncounts:\n";
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      os << "  " << it.key() << ": " << scalar(it.value()) << "\n";
    }
  }
  if (with_timings && !timings.empty()) {
    os << "\ntimings (s):\n";
    for (auto it = timings.begin(); it != timings.end(); ++it) {
      os << "  " << it.key() << ": " << scalar(it.value()) << "\n";
    }
  }
  return os.str();
}

}  // namespace ncposet::cli
