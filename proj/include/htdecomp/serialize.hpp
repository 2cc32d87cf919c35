#ifndef HTDECOMP_SERIALIZE_HPP
#define HTDECOMP_SERIALIZE_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <htdecomp/htnode.hpp>
#include <htdecomp/hypergraph.hpp>

namespace htdecomp {

enum class DecompFormat { kText, kGml, kJson };

// Serializing a tree that still contains unexpanded placeholder nodes is a
// programming error on the caller's side; the formats have no notion of them.
class PlaceholderError : public HypergraphError {
 public:
  using HypergraphError::HypergraphError;
};

namespace serialize_detail {

inline std::vector<std::string> edge_names(const EdgeSet& set, const Hypergraph& h) {
  std::vector<std::string> names;
  for (std::size_t e : set) names.push_back(h.edge_name(e));
  std::sort(names.begin(), names.end());
  return names;
}

inline std::vector<std::string> vertex_names(const VertexSet& set, const Hypergraph& h) {
  std::vector<std::string> names;
  for (std::size_t v : set) names.push_back(h.vertex_name(v));
  std::sort(names.begin(), names.end());
  return names;
}

inline std::string braced(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ",";
    out += names[i];
  }
  out += "}";
  return out;
}

inline void require_concrete(const HTNode& node) {
  if (count_placeholders(node) > 0)
    throw PlaceholderError("cannot serialize a tree with placeholder nodes");
}

}  // namespace serialize_detail

// Renders one node as `lambda: {e1,e2} chi: {a,b}`; names sorted so the label
// is independent of internal index order.
inline std::string node_label(const HTNode& node, const Hypergraph& h) {
  using namespace serialize_detail;
  return "lambda: " + braced(edge_names(node.lambda, h)) +
         " chi: " + braced(vertex_names(node.chi, h));
}

namespace serialize_detail {

inline void write_text(const HTNode& node, const Hypergraph& h, std::size_t depth,
                       std::string& out) {
  out.append(2 * depth, ' ');
  out += node_label(node, h);
  out += '\n';
  for (const HTNode& child : node.children) write_text(child, h, depth + 1, out);
}

inline std::size_t write_gml_nodes(const HTNode& node, const Hypergraph& h,
                                   std::size_t next_id, std::string& out) {
  out += "  node [ id " + std::to_string(next_id) + " label \"" +
         node_label(node, h) + "\" ]\n";
  ++next_id;
  for (const HTNode& child : node.children)
    next_id = write_gml_nodes(child, h, next_id, out);
  return next_id;
}

inline std::size_t write_gml_edges(const HTNode& node, std::size_t self,
                                   std::string& out) {
  std::size_t next_id = self + 1;
  for (const HTNode& child : node.children) {
    out += "  edge [ source " + std::to_string(self) + " target " +
           std::to_string(next_id) + " ]\n";
    next_id = write_gml_edges(child, next_id, out);
  }
  return next_id;
}

inline nlohmann::ordered_json to_json(const HTNode& node, const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["lambda"] = edge_names(node.lambda, h);
  j["chi"] = vertex_names(node.chi, h);
  j["children"] = nlohmann::ordered_json::array();
  for (const HTNode& child : node.children)
    j["children"].push_back(to_json(child, h));
  return j;
}

inline HTNode from_json(const nlohmann::json& j, const Hypergraph& h) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("chi") ||
      !j.contains("children"))
    throw HypergraphError("decomposition json: node must have lambda, chi, children");
  HTNode node;
  node.lambda = h.make_edge_set(j.at("lambda").get<std::vector<std::string>>());
  node.chi = h.make_vertex_set(j.at("chi").get<std::vector<std::string>>());
  for (const auto& child : j.at("children"))
    node.children.push_back(from_json(child, h));
  return node;
}

}  // namespace serialize_detail

inline std::string serialize_decomposition(const HTNode& tree, const Hypergraph& h,
                                           DecompFormat format) {
  using namespace serialize_detail;
  require_concrete(tree);
  std::string out;
  switch (format) {
    case DecompFormat::kText:
      write_text(tree, h, 0, out);
      break;
    case DecompFormat::kGml:
      out += "graph [\n  directed 1\n";
      write_gml_nodes(tree, h, 0, out);
      write_gml_edges(tree, 0, out);
      out += "]\n";
      break;
    case DecompFormat::kJson:
      out = to_json(tree, h).dump(2);
      out += '\n';
      break;
  }
  return out;
}

// Inverse of the json format; names are resolved against `h` and unknown
// names raise HypergraphError.
inline HTNode parse_decomposition_json(std::string_view text, const Hypergraph& h) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw HypergraphError(std::string("decomposition json: ") + e.what());
  }
  try {
    return serialize_detail::from_json(j, h);
  } catch (const nlohmann::json::exception& e) {
    throw HypergraphError(std::string("decomposition json: ") + e.what());
  }
}

}  // namespace htdecomp

#endif  // HTDECOMP_SERIALIZE_HPP
