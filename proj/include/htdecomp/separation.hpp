#ifndef HTDECOMP_SEPARATION_HPP
#define HTDECOMP_SEPARATION_HPP

#include <cstddef>
#include <vector>

#include <htdecomp/hypergraph.hpp>

namespace htdecomp {

// Result of cutting an edge set with a separator. components, covered_edges
// and the separator members present in the input partition it: every edge of
// `edges` lands in exactly one of the three.
struct SeparationResult {
  std::vector<EdgeSet> components;
  EdgeSet covered_edges;
};

// Splits `edges` minus `separator` into maximal groups connected through
// vertices outside the separator's vertex union. Edges lying entirely inside
// that union belong to no component and are reported as covered. Only the
// separator's vertex union matters, so separator edges outside `edges` are
// fine. Components are emitted in ascending order of their smallest edge
// index.
inline SeparationResult separate(const EdgeSet& edges, const EdgeSet& separator,
                                 const Hypergraph& h) {
  VertexSet sep_vertices = vertex_union(separator, h);

  SeparationResult result;
  result.covered_edges = h.empty_edge_set();
  EdgeSet rest = h.empty_edge_set();
  for (std::size_t e : edges - separator) {
    if (h.edge_vertices(e).is_subset_of(sep_vertices))
      result.covered_edges.insert(e);
    else
      rest.insert(e);
  }

  std::vector<char> visited(h.edge_count(), 0);
  std::vector<std::size_t> queue;
  for (std::size_t seed : rest) {
    if (visited[seed]) continue;
    EdgeSet comp(h.edge_count());
    queue.assign(1, seed);
    visited[seed] = 1;
    while (!queue.empty()) {
      std::size_t f = queue.back();
      queue.pop_back();
      comp.insert(f);
      for (std::size_t v : h.edge_vertices(f)) {
        if (sep_vertices.contains(v)) continue;
        for (std::size_t g : h.edges_containing(v)) {
          if (rest.contains(g) && !visited[g]) {
            visited[g] = 1;
            queue.push_back(g);
          }
        }
      }
    }
    result.components.push_back(std::move(comp));
  }
  return result;
}

}  // namespace htdecomp

#endif  // HTDECOMP_SEPARATION_HPP
