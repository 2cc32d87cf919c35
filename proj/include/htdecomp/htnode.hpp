#ifndef HTDECOMP_HTNODE_HPP
#define HTDECOMP_HTNODE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <htdecomp/hypergraph.hpp>

namespace htdecomp {

// One node of a hypertree decomposition: an edge label lambda, a vertex label
// chi and child subtrees. A placeholder node stands for a component already
// proven decomposable; it has no children and keeps the component and its
// connector vertices so expand() can rebuild the real subtree later.
struct HTNode {
  EdgeSet lambda;
  VertexSet chi;
  std::vector<HTNode> children;

  struct Placeholder {
    EdgeSet component;
    VertexSet child_conn;
  };
  std::optional<Placeholder> placeholder;

  bool is_placeholder() const { return placeholder.has_value(); }
};

inline std::size_t count_placeholders(const HTNode& node) {
  std::size_t n = node.is_placeholder() ? 1 : 0;
  for (const auto& c : node.children) n += count_placeholders(c);
  return n;
}

inline std::size_t node_count(const HTNode& node) {
  std::size_t n = 1;
  for (const auto& c : node.children) n += node_count(c);
  return n;
}

// Maximum lambda size over all nodes.
inline std::size_t tree_width(const HTNode& node) {
  std::size_t w = node.lambda.count();
  for (const auto& c : node.children) w = std::max(w, tree_width(c));
  return w;
}

inline bool trees_equal(const HTNode& a, const HTNode& b) {
  if (!(a.lambda == b.lambda) || !(a.chi == b.chi)) return false;
  if (a.is_placeholder() != b.is_placeholder()) return false;
  if (a.is_placeholder() &&
      (!(a.placeholder->component == b.placeholder->component) ||
       !(a.placeholder->child_conn == b.placeholder->child_conn)))
    return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!trees_equal(a.children[i], b.children[i])) return false;
  return true;
}

}  // namespace htdecomp

#endif  // HTDECOMP_HTNODE_HPP
