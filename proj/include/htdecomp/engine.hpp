#ifndef HTDECOMP_ENGINE_HPP
#define HTDECOMP_ENGINE_HPP

#include <cassert>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include <htdecomp/cover.hpp>
#include <htdecomp/htnode.hpp>
#include <htdecomp/hypergraph.hpp>
#include <htdecomp/separation.hpp>

namespace htdecomp {

// Canonical form of a <separator, component> pair: both sides as sorted,
// duplicate-free index lists. Equal sets always map to equal keys.
struct SepCompKey {
  std::vector<std::uint32_t> separator;
  std::vector<std::uint32_t> component;

  bool operator==(const SepCompKey&) const = default;
};

struct SepCompKeyHash {
  std::size_t operator()(const SepCompKey& key) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](const std::vector<std::uint32_t>& v) {
      h ^= v.size() + 0x9e3779b9;
      h *= 1099511628211ull;
      for (std::uint32_t x : v) {
        h ^= x;
        h *= 1099511628211ull;
      }
    };
    mix(key.separator);
    mix(key.component);
    return h;
  }
};

inline SepCompKey cache_key(const EdgeSet& separator, const EdgeSet& component) {
  return SepCompKey{separator.to_indices(), component.to_indices()};
}

// Verbatim mode (kReject) treats an empty component list as failure; the
// default (kAccept) treats it as success, since the node's chi already covers
// every edge that fell inside the separator's vertex union.
enum class EmptyComponentsMode { kAccept, kReject };

struct EngineConfig {
  std::size_t k = 1;
  bool use_fail_cache = true;
  bool use_succ_cache = true;
  bool all_covers = false;
  EmptyComponentsMode empty_components = EmptyComponentsMode::kAccept;
  std::optional<double> timeout_seconds;
};

// Counters only; they never influence the search.
struct EngineStats {
  std::uint64_t decomp_cov_calls = 0;
  std::uint64_t decomp_add_calls = 0;
  std::uint64_t cover_candidates = 0;
  std::uint64_t fail_cache_hits = 0;
  std::uint64_t succ_cache_hits = 0;
  std::uint64_t placeholders_created = 0;
  std::uint64_t placeholders_expanded = 0;
};

class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A success cache entry that cannot be re-derived during expand. Signals an
// internal inconsistency; never raised on sound caches.
class ExpansionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Backtracking search for a hypertree decomposition of width <= k, with
// memoization of failed and succeeded <separator, component> pairs. One
// instance drives one run at a time; distinct instances may run concurrently
// over a shared hypergraph.
class DetKDecomp {
 public:
  DetKDecomp(const Hypergraph& h, EngineConfig config)
      : h_(&h), config_(config) {
    assert(config_.k >= 1);
  }

  // Runs the full search from fresh caches and expands the result, so the
  // returned tree never contains placeholders.
  std::optional<HTNode> run() {
    fail_seps_.clear();
    succ_seps_.clear();
    stats_ = EngineStats{};
    deadline_.reset();
    if (config_.timeout_seconds)
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*config_.timeout_seconds));
    auto tree = decomp_cov(h_->all_edges(), h_->empty_vertex_set());
    if (tree) {
      *tree = expand(std::move(*tree));
      assert(count_placeholders(*tree) == 0);
    }
    return tree;
  }

  // Decomposes `edges` so that the root node covers conn. Small edge sets
  // become a single node directly; otherwise each candidate cover separator
  // is tried in enumeration order and the first success wins.
  std::optional<HTNode> decomp_cov(const EdgeSet& edges, const VertexSet& conn) {
    ++stats_.decomp_cov_calls;
    check_deadline();
    assert(conn.is_subset_of(vertex_union(edges, *h_)));
    if (edges.count() <= config_.k) {
      return HTNode{edges, vertex_union(edges, *h_), {}, std::nullopt};
    }
    EdgeSet pool = bound_edges(conn, *h_);
    CoverEnumerator candidates = covers(conn, pool, config_.k, *h_, config_.all_covers);
    while (auto cov_sep = candidates.next()) {
      ++stats_.cover_candidates;
      if (auto tree = decomp_add(edges, conn, *cov_sep)) return tree;
    }
    return std::nullopt;
  }

  // Extends a cover separator that lies outside `edges` by one member edge,
  // separates, and recurses into the resulting components. Builds the node
  // labelled with the separator on success.
  std::optional<HTNode> decomp_add(const EdgeSet& edges, const VertexSet& conn,
                                   const EdgeSet& cov_sep) {
    ++stats_.decomp_add_calls;
    EdgeSet in_cov_sep = cov_sep & edges;
    if (in_cov_sep.empty() && cov_sep.count() >= config_.k) return std::nullopt;

    auto try_separator = [&](const EdgeSet& add_sep) -> std::optional<HTNode> {
      EdgeSet separator = cov_sep | add_sep;
      SeparationResult sep = separate(edges, separator, *h_);
      if (config_.use_fail_cache) {
        std::size_t known_bad = 0;
        for (const EdgeSet& comp : sep.components)
          if (fail_seps_.contains(cache_key(separator, comp))) ++known_bad;
        if (known_bad > 0) {
          stats_.fail_cache_hits += known_bad;
          return std::nullopt;
        }
      }
      for (const EdgeSet& comp : sep.components) {
        assert(comp.count() < edges.count());
        (void)comp;
      }
      auto subtrees = decomp_sub(sep.components, separator);
      if (!subtrees) return std::nullopt;
      if (subtrees->empty() &&
          config_.empty_components == EmptyComponentsMode::kReject)
        return std::nullopt;
      VertexSet chi = conn | vertex_union(in_cov_sep | add_sep, *h_);
      assert((vertex_union(separator, *h_) & vertex_union(edges, *h_)).is_subset_of(chi));
      return HTNode{separator, std::move(chi), std::move(*subtrees), std::nullopt};
    };

    if (!in_cov_sep.empty()) return try_separator(h_->empty_edge_set());
    for (std::size_t e : edges) {
      if (auto tree = try_separator(EdgeSet::single(h_->edge_count(), e))) return tree;
    }
    return std::nullopt;
  }

  // Recurses into each component in order. A component whose pair is already
  // in the success cache becomes a placeholder; the first failing component
  // is recorded in the fail cache and aborts the whole list.
  std::optional<std::vector<HTNode>> decomp_sub(const std::vector<EdgeSet>& components,
                                                const EdgeSet& separator) {
    std::vector<HTNode> subtrees;
    subtrees.reserve(components.size());
    for (const EdgeSet& comp : components) {
      VertexSet child_conn = vertex_union(comp, *h_) & vertex_union(separator, *h_);
      SepCompKey key = cache_key(separator, comp);
      if (config_.use_succ_cache && succ_seps_.contains(key)) {
        ++stats_.succ_cache_hits;
        ++stats_.placeholders_created;
        HTNode ph{h_->empty_edge_set(), h_->empty_vertex_set(), {}, std::nullopt};
        ph.placeholder = HTNode::Placeholder{comp, std::move(child_conn)};
        subtrees.push_back(std::move(ph));
        continue;
      }
      auto tree = decomp_cov(comp, child_conn);
      if (!tree) {
        if (config_.use_fail_cache) {
          assert(!succ_seps_.contains(key));
          fail_seps_.insert(std::move(key));
        }
        return std::nullopt;
      }
      if (config_.use_succ_cache) {
        assert(!fail_seps_.contains(key));
        succ_seps_.insert(std::move(key));
      }
      subtrees.push_back(std::move(*tree));
    }
    return subtrees;
  }

  // Replaces every placeholder by re-deriving its component under the current
  // caches. Nested placeholders cover strictly smaller components, so the
  // recursion bottoms out.
  HTNode expand(HTNode root) {
    expand_in_place(root);
    return root;
  }

  const EngineStats& stats() const { return stats_; }
  const EngineConfig& config() const { return config_; }
  const std::unordered_set<SepCompKey, SepCompKeyHash>& fail_seps() const { return fail_seps_; }
  const std::unordered_set<SepCompKey, SepCompKeyHash>& succ_seps() const { return succ_seps_; }

 private:
  void expand_in_place(HTNode& node) {
    if (node.is_placeholder()) {
      ++stats_.placeholders_expanded;
      EdgeSet component = node.placeholder->component;
      VertexSet child_conn = node.placeholder->child_conn;
      auto tree = decomp_cov(component, child_conn);
      if (!tree)
        throw ExpansionError("success cache entry could not be re-derived");
      node = std::move(*tree);
    }
    for (auto& child : node.children) expand_in_place(child);
  }

  void check_deadline() const {
    if (deadline_ && std::chrono::steady_clock::now() >= *deadline_)
      throw TimeoutError("decomposition timed out");
  }

  const Hypergraph* h_;
  EngineConfig config_;
  EngineStats stats_;
  std::unordered_set<SepCompKey, SepCompKeyHash> fail_seps_;
  std::unordered_set<SepCompKey, SepCompKeyHash> succ_seps_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

// Convenience entry point: decompose h at width bound k. Returns the expanded
// decomposition tree, or nothing when no decomposition of width <= k exists.
inline std::optional<HTNode> det_k_decomp(const Hypergraph& h, std::size_t k,
                                          EngineConfig config = {}) {
  config.k = k;
  DetKDecomp engine(h, config);
  return engine.run();
}

}  // namespace htdecomp

#endif  // HTDECOMP_ENGINE_HPP
