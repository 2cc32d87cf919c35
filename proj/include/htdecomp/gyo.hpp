#ifndef HTDECOMP_GYO_HPP
#define HTDECOMP_GYO_HPP

#include <cstddef>
#include <vector>

#include <htdecomp/hypergraph.hpp>

namespace htdecomp {

// GYO reduction: repeatedly strip vertices occurring in exactly one edge and
// edges contained in another edge. The hypergraph is alpha-acyclic exactly
// when this empties it. The outcome does not depend on the removal order; the
// loop below just applies every available step per round.
inline bool gyo_reduce(const Hypergraph& h) {
  std::vector<VertexSet> live;
  live.reserve(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) live.push_back(h.edge_vertices(e));
  std::vector<char> active(h.edge_count(), 1);

  bool changed = true;
  while (changed) {
    changed = false;

    std::vector<std::size_t> occurrences(h.vertex_count(), 0);
    std::vector<std::size_t> sole_edge(h.vertex_count(), 0);
    for (std::size_t e = 0; e < live.size(); ++e) {
      if (!active[e]) continue;
      for (std::size_t v : live[e]) {
        ++occurrences[v];
        sole_edge[v] = e;
      }
    }
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      if (occurrences[v] == 1) {
        live[sole_edge[v]].erase(v);
        changed = true;
      }
    }

    for (std::size_t e = 0; e < live.size(); ++e) {
      if (!active[e]) continue;
      if (live[e].empty()) {
        active[e] = 0;
        changed = true;
        continue;
      }
      for (std::size_t f = 0; f < live.size(); ++f) {
        // A pair of equal edges loses only the lower-indexed one per round.
        if (f == e || !active[f]) continue;
        if (live[e].is_subset_of(live[f])) {
          active[e] = 0;
          changed = true;
          break;
        }
      }
    }
  }

  for (char a : active)
    if (a) return false;
  return true;
}

}  // namespace htdecomp

#endif  // HTDECOMP_GYO_HPP
