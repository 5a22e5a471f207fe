#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ncposet::cli {

using Json = nlohmann::ordered_json;

/// Exceeded size cap or malformed argument; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  Json params = Json::object();
  bool pass = false;
  Json detail = Json::object();
};

/// Outcome of one CLI invocation. Timings are kept apart so the rest of the
/// report is identical across runs.
struct RunReport {
  std::string command;
  std::vector<Check> checks;
  Json counts = Json::object();
  Json data = Json::object();
  Json timings = Json::object();

  Check& add(std::string name, Json params, bool pass, Json detail = Json::object());
  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }

  Json to_json(bool with_timings) const;
  std::string to_text(bool with_timings) const;
};

}  // namespace ncposet::cli
