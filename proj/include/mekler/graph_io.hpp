#pragma once

// JSON graph exchange document:
//
//   { "p": 3,                         (optional)
//     "naturals": [0, 1, 2],
//     "gadget_pairs": [[0, 1], [1, 2]],
//     "extra_edges": [["n:0", "n:2"]],  (optional; arbitrary vertex pairs)
//     "r_edges": [[0, 1]] }             (optional; the edge set R)

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mekler/graph.hpp"

namespace mekler {

struct GraphDocument {
  std::optional<std::uint32_t> p;
  std::set<Natural> naturals;
  std::set<NaturalPair> gadget_pairs;
  std::vector<std::pair<Vertex, Vertex>> extra_edges;
  std::optional<std::set<NaturalPair>> r_edges;

  // A-fragment on naturals + gadget_pairs, plus extra_edges (whose endpoints
  // are added to the vertex set).
  Graph build() const;

  // The graph on naturals this document describes: r_edges when present,
  // otherwise the natural-natural extra edges. Throws if extra edges touch
  // non-natural vertices and no r_edges field is given.
  NaturalGraph natural_graph() const;
};

GraphDocument parse_graph_document(const std::string& text);
GraphDocument read_graph_document(const std::string& path);
std::string to_json_text(const GraphDocument& doc);
GraphDocument document_for(const std::set<Natural>& naturals, const std::set<NaturalPair>& gadget_pairs);

}  // namespace mekler
