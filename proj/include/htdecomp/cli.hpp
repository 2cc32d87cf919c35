#ifndef HTDECOMP_CLI_HPP
#define HTDECOMP_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <htdecomp/engine.hpp>
#include <htdecomp/hypergraph.hpp>
#include <htdecomp/parser.hpp>
#include <htdecomp/serialize.hpp>
#include <htdecomp/validator.hpp>

namespace htdecomp {

// Exit codes of the command line driver.
inline constexpr int kExitFound = 0;
inline constexpr int kExitNoDecomposition = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTimeout = 3;
inline constexpr int kExitInvalid = 4;

namespace cli_detail {

inline std::string stats_line(const EngineStats& s, long long wall_ms) {
  std::ostringstream os;
  os << "decomp_cov_calls=" << s.decomp_cov_calls
     << " decomp_add_calls=" << s.decomp_add_calls
     << " cover_candidates=" << s.cover_candidates
     << " fail_cache_hits=" << s.fail_cache_hits
     << " succ_cache_hits=" << s.succ_cache_hits
     << " placeholders=" << s.placeholders_created
     << " wall_ms=" << wall_ms;
  return os.str();
}

inline DecompFormat parse_format(const std::string& name) {
  if (name == "gml") return DecompFormat::kGml;
  if (name == "json") return DecompFormat::kJson;
  return DecompFormat::kText;
}

}  // namespace cli_detail

// Runs the solver end to end. `args` holds the command line without the
// program name, in natural order. Output goes to `out`, diagnostics and the
// optional stats line to `err`. Returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  std::string input_path;
  std::size_t k = 0;
  bool validate_tree = false;
  bool print_stats = false;
  std::string output_path;
  std::string format_name = "text";
  bool no_fail_cache = false;
  bool no_succ_cache = false;
  bool all_covers = false;
  std::string empty_components = "accept";
  double timeout = -1.0;

  CLI::App app{"computes hypertree decompositions of bounded width", "htdecomp"};
  app.add_option("input", input_path, "hypergraph file to decompose")->required();
  app.add_option("-k,--k", k, "width bound (at least 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  app.add_flag("--validate", validate_tree,
               "check the produced decomposition and fail if it is invalid");
  app.add_flag("--stats", print_stats, "print search statistics to stderr");
  app.add_option("-o,--output", output_path,
                 "write the decomposition to this file instead of stdout");
  app.add_option("--format", format_name, "output format (default: text)")
      ->check(CLI::IsMember({"text", "gml", "json"}));
  app.add_flag("--no-fail-cache", no_fail_cache, "disable the failure cache");
  app.add_flag("--no-succ-cache", no_succ_cache, "disable the success cache");
  app.add_flag("--all-covers", all_covers,
               "enumerate redundant covers as well (slower, same outcomes)");
  app.add_option("--empty-components", empty_components,
                 "how to treat separators leaving no components (default: accept)")
      ->check(CLI::IsMember({"accept", "reject"}));
  app.add_option("--timeout", timeout, "wall clock budget in seconds")
      ->check(CLI::NonNegativeNumber);

  try {
    // This parse overload consumes arguments back to front.
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitFound;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ifstream in(input_path);
  if (!in) {
    err << "error: cannot open '" << input_path << "'\n";
    return kExitUsage;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  std::optional<Hypergraph> graph;
  try {
    graph = parse_hypergraph(buffer.str());
  } catch (const HypergraphError& e) {
    err << "error: " << input_path << ": " << e.what() << "\n";
    return kExitUsage;
  }

  EngineConfig config;
  config.k = k;
  config.use_fail_cache = !no_fail_cache;
  config.use_succ_cache = !no_succ_cache;
  config.all_covers = all_covers;
  config.empty_components = empty_components == "reject"
                                ? EmptyComponentsMode::kReject
                                : EmptyComponentsMode::kAccept;
  if (timeout >= 0.0) config.timeout_seconds = timeout;

  DetKDecomp engine(*graph, config);
  std::optional<HTNode> tree;
  auto started = std::chrono::steady_clock::now();
  try {
    tree = engine.run();
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << "\n";
    return kExitTimeout;
  }
  auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();

  int code = kExitFound;
  if (!tree) {
    err << "no hypertree decomposition of width at most " << k << " exists\n";
    code = kExitNoDecomposition;
  } else {
    std::string rendered =
        serialize_decomposition(*tree, *graph, cli_detail::parse_format(format_name));
    if (output_path.empty()) {
      out << rendered;
    } else {
      std::ofstream file(output_path);
      if (!file) {
        err << "error: cannot write '" << output_path << "'\n";
        return kExitUsage;
      }
      file << rendered;
    }
    if (validate_tree) {
      ValidationReport report = validate(*graph, *tree, k);
      if (!report.ok()) {
        for (const Violation& v : report.violations)
          err << "validation: " << v.condition << ": " << v.detail << "\n";
        if (!report.width_ok)
          err << "validation: width " << report.width << " exceeds bound " << k
              << "\n";
        code = kExitInvalid;
      }
    }
  }
  if (print_stats)
    err << cli_detail::stats_line(engine.stats(), wall_ms) << "\n";
  return code;
}

}  // namespace htdecomp

#endif  // HTDECOMP_CLI_HPP
