#include "mekler/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mekler {

using nlohmann::json;

namespace {

std::set<NaturalPair> read_pairs(const json& arr, const char* field) {
  if (!arr.is_array()) throw ParseError(std::string(field) + " must be a list");
  std::set<NaturalPair> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
        !item[1].is_number_unsigned()) {
      throw ParseError(std::string(field) + " entries must be 2-element lists of naturals");
    }
    out.insert(NaturalPair::of(item[0].get<Natural>(), item[1].get<Natural>()));
  }
  return out;
}

json write_pairs(const std::set<NaturalPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) arr.push_back({p.lo, p.hi});
  return arr;
}

}  // namespace

Graph GraphDocument::build() const {
  Graph base = build_a_fragment(naturals, gadget_pairs);
  if (extra_edges.empty()) return base;
  std::vector<Vertex> vertices = base.vertices();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [u, v] : base.edges()) edges.emplace_back(base.vertex(u), base.vertex(v));
  for (const auto& [a, b] : extra_edges) {
    vertices.push_back(a);
    vertices.push_back(b);
    edges.emplace_back(a, b);
  }
  return Graph(std::move(vertices), edges);
}

NaturalGraph GraphDocument::natural_graph() const {
  NaturalGraph g;
  g.vertices = naturals;
  if (r_edges) {
    for (const auto& e : *r_edges) {
      if (!naturals.count(e.lo) || !naturals.count(e.hi)) {
        throw InvalidArgument("r_edges mentions a natural outside 'naturals'");
      }
    }
    g.edges = *r_edges;
    return g;
  }
  for (const auto& [a, b] : extra_edges) {
    if (!a.is_natural() || !b.is_natural()) {
      throw InvalidArgument("graph on naturals expected; edge " + a.encode() + " -- " + b.encode());
    }
    g.vertices.insert(a.natural_value());
    g.vertices.insert(b.natural_value());
    g.edges.insert(NaturalPair::of(a.natural_value(), b.natural_value()));
  }
  return g;
}

GraphDocument parse_graph_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  GraphDocument out;
  if (doc.contains("p")) {
    if (!doc["p"].is_number_unsigned()) throw ParseError("p must be a positive integer");
    out.p = doc["p"].get<std::uint32_t>();
  }
  if (doc.contains("naturals")) {
    if (!doc["naturals"].is_array()) throw ParseError("naturals must be a list");
    for (const auto& n : doc["naturals"]) {
      if (!n.is_number_unsigned()) throw ParseError("naturals must be nonnegative integers");
      out.naturals.insert(n.get<Natural>());
    }
  }
  if (doc.contains("gadget_pairs")) out.gadget_pairs = read_pairs(doc["gadget_pairs"], "gadget_pairs");
  for (const auto& pr : out.gadget_pairs) {
    if (!out.naturals.count(pr.lo) || !out.naturals.count(pr.hi)) {
      throw ParseError("gadget pair {" + std::to_string(pr.lo) + "," + std::to_string(pr.hi) +
                       "} uses a natural outside 'naturals'");
    }
  }
  if (doc.contains("r_edges")) out.r_edges = read_pairs(doc["r_edges"], "r_edges");
  if (doc.contains("extra_edges")) {
    const auto& arr = doc["extra_edges"];
    if (!arr.is_array()) throw ParseError("extra_edges must be a list");
    for (const auto& item : arr) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
        throw ParseError("extra_edges entries must be 2-element lists of encoded vertices");
      }
      out.extra_edges.emplace_back(Vertex::decode(item[0].get<std::string>()),
                                   Vertex::decode(item[1].get<std::string>()));
    }
  }
  return out;
}

GraphDocument read_graph_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_document(buf.str());
}

std::string to_json_text(const GraphDocument& doc) {
  json out;
  if (doc.p) out["p"] = *doc.p;
  out["naturals"] = doc.naturals;
  out["gadget_pairs"] = write_pairs(doc.gadget_pairs);
  if (!doc.extra_edges.empty()) {
    json arr = json::array();
    for (const auto& [a, b] : doc.extra_edges) arr.push_back({a.encode(), b.encode()});
    out["extra_edges"] = arr;
  }
  if (doc.r_edges) out["r_edges"] = write_pairs(*doc.r_edges);
  return out.dump(2) + "\n";
}

GraphDocument document_for(const std::set<Natural>& naturals, const std::set<NaturalPair>& gadget_pairs) {
  GraphDocument doc;
  doc.naturals = naturals;
  doc.gadget_pairs = gadget_pairs;
  return doc;
}

}  // namespace mekler
