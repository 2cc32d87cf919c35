#ifndef HTDECOMP_HYPERGRAPH_HPP
#define HTDECOMP_HYPERGRAPH_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <htdecomp/index_set.hpp>

namespace htdecomp {

struct VertexTag {};
struct EdgeTag {};
using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

class HypergraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateEdgeNameError : public HypergraphError {
 public:
  using HypergraphError::HypergraphError;
};

class EmptyEdgeError : public HypergraphError {
 public:
  using HypergraphError::HypergraphError;
};

using NamedEdge = std::pair<std::string, std::vector<std::string>>;

// Immutable hypergraph over interned dense indices. Edge indices follow input
// order; vertex indices are assigned at first occurrence. Duplicate vertex
// mentions within one edge collapse to a single membership. All values are
// read-only after construction and safe to share across threads.
class Hypergraph {
 public:
  Hypergraph() = default;

  explicit Hypergraph(const std::vector<NamedEdge>& edge_list) {
    std::vector<std::vector<std::size_t>> edge_members;
    edge_members.reserve(edge_list.size());
    for (const auto& [name, vertices] : edge_list) {
      if (edge_index_.contains(name))
        throw DuplicateEdgeNameError("duplicate edge name '" + name + "'");
      if (vertices.empty())
        throw EmptyEdgeError("edge '" + name + "' has no vertices");
      edge_index_.emplace(name, edge_names_.size());
      edge_names_.push_back(name);
      auto& members = edge_members.emplace_back();
      for (const auto& v : vertices) {
        auto [it, inserted] = vertex_index_.emplace(v, vertex_names_.size());
        if (inserted) vertex_names_.push_back(v);
        members.push_back(it->second);
      }
    }
    edges_.reserve(edge_members.size());
    incidence_.assign(vertex_names_.size(), EdgeSet(edge_members.size()));
    for (std::size_t e = 0; e < edge_members.size(); ++e) {
      VertexSet vs(vertex_names_.size());
      for (std::size_t v : edge_members[e]) {
        vs.insert(v);
        incidence_[v].insert(e);
      }
      edges_.push_back(std::move(vs));
    }
  }

  std::size_t edge_count() const { return edges_.size(); }
  std::size_t vertex_count() const { return vertex_names_.size(); }

  const VertexSet& edge_vertices(std::size_t e) const { return edges_[e]; }
  const EdgeSet& edges_containing(std::size_t v) const { return incidence_[v]; }

  const std::string& edge_name(std::size_t e) const { return edge_names_[e]; }
  const std::string& vertex_name(std::size_t v) const { return vertex_names_[v]; }

  std::optional<std::size_t> edge_index(const std::string& name) const {
    auto it = edge_index_.find(name);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> vertex_index(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }

  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }
  EdgeSet empty_edge_set() const { return EdgeSet(edge_count()); }
  VertexSet empty_vertex_set() const { return VertexSet(vertex_count()); }

  EdgeSet make_edge_set(const std::vector<std::string>& names) const {
    EdgeSet s(edge_count());
    for (const auto& n : names) {
      auto i = edge_index(n);
      if (!i) throw HypergraphError("unknown edge name '" + n + "'");
      s.insert(*i);
    }
    return s;
  }

  VertexSet make_vertex_set(const std::vector<std::string>& names) const {
    VertexSet s(vertex_count());
    for (const auto& n : names) {
      auto i = vertex_index(n);
      if (!i) throw HypergraphError("unknown vertex name '" + n + "'");
      s.insert(*i);
    }
    return s;
  }

 private:
  std::vector<VertexSet> edges_;
  std::vector<EdgeSet> incidence_;  // vertex -> edges containing it
  std::vector<std::string> edge_names_;
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
};

inline Hypergraph build_hypergraph(const std::vector<NamedEdge>& edge_list) {
  return Hypergraph(edge_list);
}

// Union of the vertex sets of the member edges.
inline VertexSet vertex_union(const EdgeSet& edges, const Hypergraph& h) {
  VertexSet u(h.vertex_count());
  for (std::size_t e : edges) u |= h.edge_vertices(e);
  return u;
}

// All edges of h that intersect conn, over the whole hypergraph.
inline EdgeSet bound_edges(const VertexSet& conn, const Hypergraph& h) {
  EdgeSet b(h.edge_count());
  for (std::size_t v : conn) b |= h.edges_containing(v);
  return b;
}

}  // namespace htdecomp

#endif  // HTDECOMP_HYPERGRAPH_HPP
