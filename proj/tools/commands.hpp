#pragma once

#include <string>

#include "report.hpp"

namespace ncposet::cli {

/// Inclusive size range accepted by a command for one poset kind.
struct Cap {
  int lo;
  int hi;
};

Cap build_cap(const std::string& kind);
Cap verify_cap(const std::string& kind);
Cap mobius_cap(const std::string& target, const std::string& method);
Cap label_cap(const std::string& kind);
inline constexpr Cap kNbbCap{1, 9};
inline constexpr Cap kNbbElementCap{1, 7};
inline constexpr Cap kChainsCap{3, 8};
inline constexpr Cap kProbeCap{4, 7};

/// Help text listing every cap of a command.
std::string caps_help(const std::string& command);

struct BuildOptions {
  std::string kind;
  int n = 0;
  std::string dot_file;
  bool include_poset = false;
};

struct VerifyOptions {
  std::string kind = "pe-dref";
  int n = 0;
  std::string suite = "all";
};

struct MobiusOptions {
  std::string target = "pe-dref";
  int n = 0;
  std::string method = "all";
};

struct NbbOptions {
  int n = 0;
  std::string ambient = "nc";
  bool classify = false;
  std::string trees_dot;
  /// Noncrossing element whose NC-NBB bases are listed instead of those of
  /// the top element.
  std::string element;
};

struct ChainsOptions {
  int n = 0;
  std::string filter = "none";
  bool count_only = false;
};

struct LabelOptions {
  std::string kind = "pe-dref";
  int n = 0;
  std::string scheme = "leftmod";
  std::string dot_file;
};

struct ProbeOptions {
  int n = 0;
};

RunReport cmd_build(const BuildOptions& o);
RunReport cmd_verify(const VerifyOptions& o);
RunReport cmd_mobius(const MobiusOptions& o);
RunReport cmd_nbb(const NbbOptions& o);
/// Parking words are written to `csv` (one chain per line).
RunReport cmd_chains(const ChainsOptions& o, std::string& csv);
RunReport cmd_label(const LabelOptions& o);
RunReport cmd_probe_intervals(const ProbeOptions& o);

}  // namespace ncposet::cli
