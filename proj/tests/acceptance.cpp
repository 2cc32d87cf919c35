// Acceptance gate: drives the library and the command line binary through the
// full release checklist and prints one PASS/FAIL line per criterion.
//
// usage: acceptance <path-to-cli-binary> <path-to-instances-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <htdecomp/htdecomp.hpp>

#include "test_support.hpp"

using namespace htdecomp;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int run_binary(const std::string& command) {
  int status = std::system(command.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

struct Corpus {
  std::map<std::string, Hypergraph> instances;
};

Corpus load_corpus(const fs::path& dir) {
  Corpus corpus;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".hg") continue;
    corpus.instances.emplace(entry.path().stem().string(),
                             parse_hypergraph(slurp(entry.path())));
  }
  return corpus;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli-binary> <instances-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path instances_dir = argv[2];
  const Corpus corpus = load_corpus(instances_dir);

  bool all_ok = true;
  auto report = [&](int num, bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << num << ": " << what << "\n";
    if (!ok) all_ok = false;
  };

  // 1 -- every decomposition found on the corpus validates at its bound
  {
    bool ok = corpus.instances.size() >= 30;
    std::size_t found = 0;
    for (const auto& [name, h] : corpus.instances)
      for (std::size_t k : {1, 2, 3}) {
        auto tree = det_k_decomp(h, k);
        if (!tree) continue;
        ++found;
        if (!validate(h, *tree, k).ok()) {
          std::cerr << "  criterion 1: " << name << " k=" << k
                    << " produced an invalid tree\n";
          ok = false;
        }
      }
    ok = ok && found > 0;
    report(1, ok,
           "soundness: every decomposition found over the " +
               std::to_string(corpus.instances.size()) +
               "-instance corpus validates at k in {1,2,3}");
  }

  // 2 -- width-1 decomposability coincides with the acyclicity test
  {
    bool ok = true;
    for (const auto& [name, h] : corpus.instances)
      if (det_k_decomp(h, 1).has_value() != gyo_reduce(h)) {
        std::cerr << "  criterion 2: disagreement on " << name << "\n";
        ok = false;
      }
    report(2, ok, "width-1 verdicts match the GYO acyclicity oracle");
  }

  // 3 -- known small widths on the named instances
  {
    bool ok = true;
    auto must = [&](const std::string& name) -> const Hypergraph& {
      auto it = corpus.instances.find(name);
      if (it == corpus.instances.end()) {
        std::cerr << "  criterion 3: missing instance " << name << "\n";
        std::exit(2);
      }
      return it->second;
    };
    ok = ok && det_k_decomp(must("chain"), 1).has_value();
    ok = ok && !det_k_decomp(must("tri"), 1).has_value();
    {
      auto tree = det_k_decomp(must("tri"), 2);
      ok = ok && tree && validate(must("tri"), *tree, 2).ok();
    }
    std::vector<std::string> cycles = {"cyc4",   "cycle4", "cycle5", "cycle6",
                                       "cycle7", "cycle8", "cycle9", "cycle10"};
    for (const auto& name : cycles) {
      const Hypergraph& h = must(name);
      bool row = !gyo_reduce(h) && !det_k_decomp(h, 1).has_value();
      auto tree = det_k_decomp(h, 2);
      row = row && tree && validate(h, *tree, 2).ok();
      if (!row) {
        std::cerr << "  criterion 3: unexpected verdict on " << name << "\n";
        ok = false;
      }
    }
    report(3, ok, "chain/triangle/cycle widths come out as expected");
  }

  // 4 -- the verdict is independent of caches, cover mode and empty-component
  //      handling on the whole corpus
  {
    bool ok = true;
    for (const auto& [name, h] : corpus.instances)
      for (std::size_t k : {1, 2, 3}) {
        int found = 0, total = 0;
        for (bool fc : {true, false})
          for (bool sc : {true, false})
            for (bool ac : {true, false})
              for (auto mode :
                   {EmptyComponentsMode::kAccept, EmptyComponentsMode::kReject}) {
                EngineConfig cfg{.k = k,
                                 .use_fail_cache = fc,
                                 .use_succ_cache = sc,
                                 .all_covers = ac,
                                 .empty_components = mode};
                DetKDecomp engine(h, cfg);
                ++total;
                if (engine.run()) ++found;
              }
        if (found != 0 && found != total) {
          std::cerr << "  criterion 4: " << name << " k=" << k << " split "
                    << found << "/" << total << "\n";
          ok = false;
        }
      }
    report(4, ok, "verdicts agree across all 16 search configurations");
  }

  // 5 -- the bridge instance drives the success cache and expand
  {
    bool ok = false;
    auto it = corpus.instances.find("bridge");
    if (it != corpus.instances.end()) {
      DetKDecomp engine(it->second, EngineConfig{.k = 2});
      auto tree = engine.run();
      ok = tree.has_value() && engine.stats().succ_cache_hits >= 1 &&
           count_placeholders(*tree) == 0 && validate(it->second, *tree, 2).ok();
    }
    report(5, ok,
           "bridge instance: success-cache hit observed, placeholders fully "
           "expanded, tree validates");
  }

  // 6 -- separation agrees with a union-find oracle on 1,000 random pairs
  {
    bool ok = true;
    std::mt19937 rng(661);
    for (int trial = 0; trial < 1000; ++trial) {
      Hypergraph h = make_h(random_edges(rng, 6, 4, 8));
      EdgeSet edges = random_edge_subset(rng, h, 0.7);
      EdgeSet separator = random_edge_subset(rng, h, 0.3);
      if (!separation_matches(separate(edges, separator, h),
                              oracle_separate(edges, separator, h))) {
        ok = false;
        break;
      }
    }
    report(6, ok, "separation matches the union-find oracle on 1,000 random pairs");
  }

  // 7 -- cover enumeration equals brute force, order included
  {
    bool ok = true;
    std::mt19937 rng(771);
    for (int trial = 0; trial < 200; ++trial) {
      Hypergraph h = make_h(random_edges(rng, 10, 4, 9));
      EdgeSet pool = random_edge_subset(rng, h, 0.8);
      std::bernoulli_distribution coin(0.3);
      VertexSet conn = h.empty_vertex_set();
      for (std::size_t v = 0; v < h.vertex_count(); ++v)
        if (coin(rng)) conn.insert(v);
      std::size_t k = 1 + trial % 3;
      if (drain_covers(conn, pool, k, h) != oracle_covers(conn, pool, k, h)) {
        ok = false;
        break;
      }
    }
    report(7, ok,
           "cover enumeration equals brute force on 200 random triples, order "
           "included");
  }

  // 8 -- the binary prints byte-identical stdout when run twice
  {
    bool ok = true;
    fs::path a = fs::temp_directory_path() / "htdecomp_acc_a.txt";
    fs::path b = fs::temp_directory_path() / "htdecomp_acc_b.txt";
    std::vector<std::string> commands = {
        (instances_dir / "tri.hg").string() + " -k 2",
        (instances_dir / "bridge.hg").string() + " -k 2 --format json --stats",
        (instances_dir / "grid2x4.hg").string() + " -k 2 --format gml",
        (instances_dir / "cycle7.hg").string() + " -k 1",
    };
    for (const auto& tail : commands) {
      int ra = run_binary(cli + " " + tail + " > " + a.string() + " 2>/dev/null");
      int rb = run_binary(cli + " " + tail + " > " + b.string() + " 2>/dev/null");
      if (ra != rb || ra < 0 || slurp(a) != slurp(b)) {
        std::cerr << "  criterion 8: output differs for '" << tail << "'\n";
        ok = false;
      }
    }
    fs::remove(a);
    fs::remove(b);
    report(8, ok, "CLI stdout is byte-identical across repeated runs");
  }

  // 9 -- the 60-edge path solves quickly; a zero timeout exits with code 3
  {
    auto it = corpus.instances.find("path60");
    bool ok = it != corpus.instances.end();
    if (ok) {
      auto started = std::chrono::steady_clock::now();
      auto tree = det_k_decomp(it->second, 2);
      double seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - started)
                           .count();
      ok = tree.has_value() && seconds < 5.0;
      if (!ok)
        std::cerr << "  criterion 9: path60 took " << seconds << " s\n";
      int code = run_binary(cli + " " + (instances_dir / "path60.hg").string() +
                            " -k 2 --timeout 0 > /dev/null 2>&1");
      if (code != 3) {
        std::cerr << "  criterion 9: timeout run exited " << code << "\n";
        ok = false;
      }
    }
    report(9, ok, "path60 solves in under five seconds; zero timeout exits 3");
  }

  std::cout << (all_ok ? "acceptance: all criteria passed"
                       : "acceptance: FAILURES above")
            << "\n";
  return all_ok ? 0 : 1;
}
