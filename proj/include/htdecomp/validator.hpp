#ifndef HTDECOMP_VALIDATOR_HPP
#define HTDECOMP_VALIDATOR_HPP

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include <htdecomp/htnode.hpp>
#include <htdecomp/hypergraph.hpp>

namespace htdecomp {

// A single condition failure. path is the child-index sequence from the root
// to the offending node; it stays empty when no single node is at fault.
struct Violation {
  std::string condition;
  std::vector<std::size_t> path;
  std::string detail;
};

struct ValidationReport {
  bool edge_coverage_ok = false;
  bool connectedness_ok = false;
  bool chi_subset_ok = false;
  bool special_condition_ok = false;
  std::size_t width = 0;
  bool width_ok = false;
  std::vector<Violation> violations;

  bool conditions_ok() const {
    return edge_coverage_ok && connectedness_ok && chi_subset_ok && special_condition_ok;
  }
  bool ok() const { return conditions_ok() && width_ok; }
};

namespace validator_detail {

struct FlatNode {
  const HTNode* node;
  std::size_t parent;  // index into the flat list; self for the root
  std::vector<std::size_t> children;
  std::vector<std::size_t> path;
};

inline void flatten_into(const HTNode& node, std::size_t parent,
                         std::vector<std::size_t> path, std::vector<FlatNode>& out) {
  std::size_t self = out.size();
  out.push_back(FlatNode{&node, parent, {}, path});
  if (parent != self) out[parent].children.push_back(self);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    auto child_path = path;
    child_path.push_back(i);
    flatten_into(node.children[i], self, std::move(child_path), out);
  }
}

inline std::vector<FlatNode> flatten(const HTNode& root) {
  std::vector<FlatNode> out;
  flatten_into(root, 0, {}, out);
  return out;
}

inline std::string join_vertex_names(const VertexSet& vs, const Hypergraph& h) {
  std::string s;
  for (std::size_t v : vs) {
    if (!s.empty()) s += ",";
    s += h.vertex_name(v);
  }
  return s;
}

inline bool edge_coverage(const Hypergraph& h, const std::vector<FlatNode>& nodes,
                          std::vector<Violation>* violations) {
  bool ok = true;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    bool covered = false;
    for (const auto& fn : nodes) {
      if (h.edge_vertices(e).is_subset_of(fn.node->chi)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      ok = false;
      if (violations)
        violations->push_back({"edge-coverage", {},
                               "edge '" + h.edge_name(e) + "' is not contained in any chi"});
    }
  }
  return ok;
}

inline bool connectedness(const Hypergraph& h, const std::vector<FlatNode>& nodes,
                          std::vector<Violation>* violations) {
  bool ok = true;
  std::vector<char> holds(nodes.size());
  std::vector<char> seen(nodes.size());
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    std::size_t total = 0;
    std::size_t first = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      holds[i] = nodes[i].node->chi.contains(v) ? 1 : 0;
      if (holds[i] && total++ == 0) first = i;
    }
    if (total <= 1) continue;
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, first);
    seen[first] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      ++reached;
      auto visit = [&](std::size_t j) {
        if (holds[j] && !seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      };
      if (nodes[i].parent != i) visit(nodes[i].parent);
      for (std::size_t c : nodes[i].children) visit(c);
    }
    if (reached != total) {
      ok = false;
      if (violations) {
        // report some occurrence cut off from the first one
        std::size_t stray = first;
        for (std::size_t i = 0; i < nodes.size(); ++i)
          if (holds[i] && !seen[i]) stray = i;
        violations->push_back({"connectedness", nodes[stray].path,
                               "occurrences of vertex '" + h.vertex_name(v) +
                                   "' do not induce a connected subtree"});
      }
    }
  }
  return ok;
}

inline bool chi_subset_lambda(const Hypergraph& h, const std::vector<FlatNode>& nodes,
                              std::vector<Violation>* violations) {
  bool ok = true;
  for (const auto& fn : nodes) {
    VertexSet missing = fn.node->chi - vertex_union(fn.node->lambda, h);
    if (!missing.empty()) {
      ok = false;
      if (violations)
        violations->push_back({"chi-subset-lambda", fn.path,
                               "chi vertices {" + join_vertex_names(missing, h) +
                                   "} are outside the lambda union"});
    }
  }
  return ok;
}

inline bool special_condition(const Hypergraph& h, const std::vector<FlatNode>& nodes,
                              std::vector<Violation>* violations) {
  // subtree chi unions, computed children-first (children follow parents in
  // the preorder flat list)
  std::vector<VertexSet> subtree_chi(nodes.size());
  for (std::size_t i = nodes.size(); i-- > 0;) {
    subtree_chi[i] = nodes[i].node->chi;
    for (std::size_t c : nodes[i].children) subtree_chi[i] |= subtree_chi[c];
  }
  bool ok = true;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    VertexSet escaped =
        (vertex_union(nodes[i].node->lambda, h) & subtree_chi[i]) - nodes[i].node->chi;
    if (!escaped.empty()) {
      ok = false;
      if (violations)
        violations->push_back({"special-condition", nodes[i].path,
                               "lambda vertices {" + join_vertex_names(escaped, h) +
                                   "} occur below the node but not in its chi"});
    }
  }
  return ok;
}

}  // namespace validator_detail

inline bool check_edge_coverage(const Hypergraph& h, const HTNode& tree) {
  assert(count_placeholders(tree) == 0);
  return validator_detail::edge_coverage(h, validator_detail::flatten(tree), nullptr);
}

inline bool check_connectedness(const Hypergraph& h, const HTNode& tree) {
  assert(count_placeholders(tree) == 0);
  return validator_detail::connectedness(h, validator_detail::flatten(tree), nullptr);
}

inline bool check_chi_subset_lambda(const Hypergraph& h, const HTNode& tree) {
  assert(count_placeholders(tree) == 0);
  return validator_detail::chi_subset_lambda(h, validator_detail::flatten(tree), nullptr);
}

inline bool check_special_condition(const Hypergraph& h, const HTNode& tree) {
  assert(count_placeholders(tree) == 0);
  return validator_detail::special_condition(h, validator_detail::flatten(tree), nullptr);
}

// Checks all four decomposition conditions and the width bound. Reads nothing
// but the hypergraph and the tree, so it is independent of how the tree was
// produced. A tree still containing placeholders fails structurally.
inline ValidationReport validate(const Hypergraph& h, const HTNode& tree, std::size_t k) {
  ValidationReport report;
  if (count_placeholders(tree) > 0) {
    auto nodes = validator_detail::flatten(tree);
    for (const auto& fn : nodes) {
      if (fn.node->is_placeholder()) {
        report.violations.push_back({"structure", fn.path, "placeholder node present"});
        break;
      }
    }
    return report;
  }
  auto nodes = validator_detail::flatten(tree);
  report.edge_coverage_ok = validator_detail::edge_coverage(h, nodes, &report.violations);
  report.connectedness_ok = validator_detail::connectedness(h, nodes, &report.violations);
  report.chi_subset_ok = validator_detail::chi_subset_lambda(h, nodes, &report.violations);
  report.special_condition_ok =
      validator_detail::special_condition(h, nodes, &report.violations);
  report.width = tree_width(tree);
  report.width_ok = report.width <= k;
  return report;
}

}  // namespace htdecomp

#endif  // HTDECOMP_VALIDATOR_HPP
