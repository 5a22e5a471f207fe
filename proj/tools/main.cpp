#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ncposet/partition.hpp"
#include "ncposet/poset.hpp"

using namespace ncposet::cli;

namespace {

constexpr int kExitUsage = 2;

std::string echo(int argc, char** argv) {
  std::string out = "ncposet";
  for (int i = 1; i < argc; ++i) out += std::string(" ") + argv[i];
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncrossing partition lattices: construction, structural verification, Moebius values"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool timings = false;
  app.add_flag("--json", json, "Print the run report as JSON");
  app.add_flag("--timings", timings, "Include wall-clock timings in the report");

  const std::vector<std::string> kinds{"pi", "nc", "pe-dref", "pe-pchn"};

  BuildOptions build;
  auto* c_build = app.add_subcommand("build", "Build a poset and print its summary");
  c_build->add_option("kind", build.kind, "pi | nc | pe-dref | pe-pchn")->required()->check(CLI::IsMember(kinds));
  c_build->add_option("--n", build.n, "Ground set size")->required();
  c_build->add_option("--dot", build.dot_file, "Write the Hasse diagram as DOT");
  c_build->footer(caps_help("build"));

  VerifyOptions verify;
  auto* c_verify = app.add_subcommand("verify", "Check lattice, graded, left-modular and EL properties");
  c_verify->add_option("--n", verify.n, "Ground set size")->required();
  c_verify->add_option("--kind", verify.kind, "pi | nc | pe-dref | pe-pchn (default pe-dref)")
      ->check(CLI::IsMember(kinds));
  c_verify->add_option("--suite", verify.suite, "lattice | graded | leftmod | el | sn-el | all (default all)")
      ->check(CLI::IsMember({"lattice", "graded", "leftmod", "el", "sn-el", "all"}));
  c_verify->footer(caps_help("verify"));

  MobiusOptions mobius;
  auto* c_mobius = app.add_subcommand("mobius", "Moebius value mu(0,1) by recursion, NBB bases and decreasing chains");
  c_mobius->add_option("--n", mobius.n, "Ground set size")->required();
  c_mobius->add_option("--target", mobius.target, "nc | pe-dref | pe-pchn (default pe-dref)")
      ->check(CLI::IsMember({"nc", "pe-dref", "pe-pchn"}));
  c_mobius->add_option("--method", mobius.method, "recursion | nbb | chains | all (default all)")
      ->check(CLI::IsMember({"recursion", "nbb", "chains", "all"}));
  c_mobius->footer(caps_help("mobius"));

  NbbOptions nbb;
  auto* c_nbb = app.add_subcommand("nbb", "List NBB bases of the top element");
  c_nbb->add_option("--n", nbb.n, "Ground set size");
  c_nbb->add_option("--ambient", nbb.ambient, "nc | pe (default nc)")->check(CLI::IsMember({"nc", "pe"}));
  c_nbb->add_flag("--classify", nbb.classify, "Sort NC bases into S1, S2, R and kept");
  c_nbb->add_option("--trees-dot", nbb.trees_dot, "Write the trees of the bases as DOT");
  c_nbb->add_option("--element", nbb.element,
                    "Noncrossing partition (e.g. 13|2|4); list its bases by rank selection and check them");
  c_nbb->footer(caps_help("nbb"));

  ChainsOptions chains;
  auto* c_chains = app.add_subcommand("chains", "Parking words of the maximal chains of NC_n as CSV");
  c_chains->add_option("--n", chains.n, "Ground set size")->required();
  c_chains->add_option("--filter", chains.filter, "none | avoid-top (drop words containing n-1)")
      ->check(CLI::IsMember({"none", "avoid-top"}));
  c_chains->add_flag("--count-only", chains.count_only, "Only count the chains");
  c_chains->footer(caps_help("chains"));

  LabelOptions label;
  auto* c_label = app.add_subcommand("label", "Run EL verification of an edge labeling");
  c_label->add_option("kind", label.kind, "pi | nc | pe-dref | pe-pchn")->required()->check(CLI::IsMember(kinds));
  c_label->add_option("--n", label.n, "Ground set size")->required();
  c_label->add_option("--scheme", label.scheme, "leftmod | parking | standard (default leftmod)")
      ->check(CLI::IsMember({"leftmod", "parking", "standard"}));
  c_label->add_option("--dot", label.dot_file, "Write the labelled Hasse diagram as DOT");
  c_label->footer(caps_help("label"));

  ProbeOptions probe;
  auto* c_probe = app.add_subcommand("probe-intervals",
                                     "Exploratory: test interval sizes of (PE_n, <=dref) for a product shape");
  c_probe->add_option("--n", probe.n, "Ground set size")->required();
  c_probe->footer(caps_help("probe-intervals"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    RunReport report;
    std::string csv;
    if (c_build->parsed()) {
      build.include_poset = json;
      report = cmd_build(build);
    } else if (c_verify->parsed()) {
      report = cmd_verify(verify);
    } else if (c_mobius->parsed()) {
      report = cmd_mobius(mobius);
    } else if (c_nbb->parsed()) {
      if (nbb.element.empty() && nbb.n == 0) throw UsageError("nbb: give --n or --element");
      report = cmd_nbb(nbb);
    } else if (c_chains->parsed()) {
      report = cmd_chains(chains, csv);
    } else if (c_label->parsed()) {
      report = cmd_label(label);
    } else if (c_probe->parsed()) {
      report = cmd_probe_intervals(probe);
    }
    report.command = echo(argc, argv);
    if (!csv.empty()) {
      std::cout << csv;
      std::cerr << (json ? report.to_json(timings).dump(2) + "\n" : report.to_text(timings));
    } else if (json) {
      std::cout << report.to_json(timings).dump(2) << "\n";
    } else {
      std::cout << report.to_text(timings);
    }
    return report.exit_code();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
}
