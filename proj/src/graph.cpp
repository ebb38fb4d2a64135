#include "mekler/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>

namespace mekler {

NaturalPair NaturalPair::of(Natural a, Natural b) {
  if (a == b) throw InvalidArgument("pair members must be distinct: " + std::to_string(a));
  return a < b ? NaturalPair{a, b} : NaturalPair{b, a};
}

std::set<NaturalPair> all_pairs(const std::set<Natural>& naturals) {
  std::set<NaturalPair> out;
  for (auto i = naturals.begin(); i != naturals.end(); ++i) {
    for (auto j = std::next(i); j != naturals.end(); ++j) out.insert(NaturalPair{*i, *j});
  }
  return out;
}

std::string_view level_name(Level l) {
  switch (l) {
    case Level::L0: return "0";
    case Level::L1: return "1";
    case Level::L1_25: return "1.25";
    case Level::L1_5: return "1.5";
    case Level::L1_75: return "1.75";
  }
  return "?";
}

Level parse_level(std::string_view s) {
  for (Level l : kAllLevels) {
    if (s == level_name(l)) return l;
  }
  throw ParseError("unknown gadget level '" + std::string(s) + "'");
}

Natural Vertex::natural_value() const {
  if (!is_natural()) throw InvalidArgument("vertex is not a natural");
  return std::get<NaturalTag>(rep_).n;
}

NaturalPair Vertex::pair() const {
  if (is_natural()) throw InvalidArgument("vertex is not a gadget vertex");
  return std::get<GadgetTag>(rep_).pair;
}

Level Vertex::level() const {
  if (is_natural()) throw InvalidArgument("vertex is not a gadget vertex");
  return std::get<GadgetTag>(rep_).level;
}

std::string Vertex::encode() const {
  if (is_natural()) return "n:" + std::to_string(natural_value());
  const auto& g = std::get<GadgetTag>(rep_);
  return "g:" + std::to_string(g.pair.lo) + "," + std::to_string(g.pair.hi) + ":" +
         std::string(level_name(g.level));
}

namespace {

Natural parse_natural(std::string_view s, std::string_view whole) {
  Natural n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad natural in vertex '" + std::string(whole) + "'");
  }
  return n;
}

}  // namespace

Vertex Vertex::decode(std::string_view s) {
  if (s.size() > 2 && s.substr(0, 2) == "n:") return natural(parse_natural(s.substr(2), s));
  if (s.size() > 2 && s.substr(0, 2) == "g:") {
    std::string_view rest = s.substr(2);
    const auto comma = rest.find(',');
    const auto colon = rest.find(':');
    if (comma == std::string_view::npos || colon == std::string_view::npos || colon < comma) {
      throw ParseError("bad gadget vertex '" + std::string(s) + "'");
    }
    const Natural a = parse_natural(rest.substr(0, comma), s);
    const Natural b = parse_natural(rest.substr(comma + 1, colon - comma - 1), s);
    if (a >= b) throw ParseError("gadget pair must be written as a<b in '" + std::string(s) + "'");
    return gadget(NaturalPair{a, b}, parse_level(rest.substr(colon + 1)));
  }
  throw ParseError("bad vertex '" + std::string(s) + "'");
}

DegreeClass degree_class(const Vertex& v) {
  if (v.is_natural()) return {true, 0};
  return {false, v.level() == Level::L0 ? 4u : 2u};
}

Graph::Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  const std::size_t n = vertices_.size();
  words_ = (n + 63) / 64;
  adjacency_.assign(n, std::vector<std::uint64_t>(words_, 0));
  neighbors_.assign(n, {});
  for (const auto& [a, b] : edges) {
    const VertexId u = id_of(a), v = id_of(b);
    if (u == v) throw InvalidArgument("self-loop at " + a.encode());
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    adjacency_[u.index][v.index / 64] |= std::uint64_t{1} << (v.index % 64);
    adjacency_[v.index][u.index / 64] |= std::uint64_t{1} << (u.index % 64);
    neighbors_[u.index].push_back(v);
    neighbors_[v.index].push_back(u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

std::optional<VertexId> Graph::find(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - vertices_.begin())};
}

VertexId Graph::id_of(const Vertex& v) const {
  auto id = find(v);
  if (!id) throw InvalidArgument("vertex " + v.encode() + " is not in the graph");
  return *id;
}

std::set<Natural> Graph::naturals() const {
  std::set<Natural> out;
  for (const auto& v : vertices_) {
    if (v.is_natural()) out.insert(v.natural_value());
  }
  return out;
}

std::set<NaturalPair> Graph::gadget_pairs() const {
  std::set<NaturalPair> out;
  for (const auto& v : vertices_) {
    if (!v.is_natural()) out.insert(v.pair());
  }
  return out;
}

bool Graph::has_gadget(NaturalPair pair) const {
  for (Level l : kAllLevels) {
    if (!find(Vertex::gadget(pair, l))) return false;
  }
  return true;
}

NicenessReport check_nice(const Graph& g) {
  NicenessReport r;
  const std::size_t n = g.size();
  const std::size_t w = g.num_words();
  r.enough_vertices = n >= 2;

  auto first_common = [&](VertexId a, VertexId b, std::optional<VertexId> skip) -> std::optional<VertexId> {
    const auto ra = g.adjacency_row(a), rb = g.adjacency_row(b);
    for (std::size_t k = 0; k < w; ++k) {
      std::uint64_t word = ra[k] & rb[k];
      if (skip && skip->index / 64 == k) word &= ~(std::uint64_t{1} << (skip->index % 64));
      if (word) return VertexId{static_cast<std::uint32_t>(k * 64 + std::countr_zero(word))};
    }
    return std::nullopt;
  };

  r.triangle_free = true;
  for (const auto& [u, v] : g.edges()) {
    if (auto c = first_common(u, v, std::nullopt)) {
      r.triangle_free = false;
      r.triangle = std::vector<VertexId>{u, v, *c};
      break;
    }
  }

  // A 4-cycle exists iff two distinct vertices share two neighbors.
  r.square_free = true;
  for (std::uint32_t a = 0; a < n && r.square_free; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      const auto ra = g.adjacency_row(VertexId{a}), rb = g.adjacency_row(VertexId{b});
      std::size_t common = 0;
      for (std::size_t k = 0; k < w; ++k) common += std::popcount(ra[k] & rb[k]);
      if (common >= 2) {
        const VertexId c1 = *first_common(VertexId{a}, VertexId{b}, std::nullopt);
        const VertexId c2 = *first_common(VertexId{a}, VertexId{b}, c1);
        r.square_free = false;
        r.square = std::vector<VertexId>{VertexId{a}, c1, VertexId{b}, c2};
        break;
      }
    }
  }

  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t u = 0; u < n; ++u) {
      if (u == v) continue;
      const auto rv = g.adjacency_row(VertexId{v}), ru = g.adjacency_row(VertexId{u});
      bool found = false;
      for (std::size_t k = 0; k < w && !found; ++k) {
        std::uint64_t word = rv[k] & ~ru[k];
        if (u / 64 == k) word &= ~(std::uint64_t{1} << (u % 64));
        found = word != 0;
      }
      if (!found) r.separation_witness_failures.emplace_back(VertexId{v}, VertexId{u});
    }
  }

  r.is_nice = r.enough_vertices && r.triangle_free && r.square_free &&
              r.separation_witness_failures.empty();
  return r;
}

Graph build_a_fragment(const std::set<Natural>& naturals, const std::set<NaturalPair>& gadget_pairs) {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Natural n : naturals) vertices.push_back(Vertex::natural(n));
  for (const NaturalPair& pr : gadget_pairs) {
    if (pr.lo == pr.hi) throw InvalidArgument("gadget pair with equal members");
    if (!naturals.count(pr.lo) || !naturals.count(pr.hi)) {
      throw InvalidArgument("gadget pair {" + std::to_string(pr.lo) + "," + std::to_string(pr.hi) +
                            "} uses a natural outside the fragment");
    }
    for (Level l : kAllLevels) vertices.push_back(Vertex::gadget(pr, l));
    const Vertex hub = Vertex::gadget(pr, Level::L0);
    edges.emplace_back(Vertex::natural(pr.lo), hub);
    edges.emplace_back(Vertex::natural(pr.hi), hub);
    for (std::size_t i = 0; i < 5; ++i) {
      edges.emplace_back(Vertex::gadget(pr, kAllLevels[i]), Vertex::gadget(pr, kAllLevels[(i + 1) % 5]));
    }
  }
  return Graph(std::move(vertices), edges);
}

Graph build_full_fragment(const std::set<Natural>& naturals) {
  return build_a_fragment(naturals, all_pairs(naturals));
}

VertexPermutation VertexPermutation::identity(std::size_t n) {
  std::vector<VertexId> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = VertexId{static_cast<std::uint32_t>(i)};
  return VertexPermutation(std::move(image));
}

VertexPermutation::VertexPermutation(std::vector<VertexId> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (const VertexId v : image_) {
    if (v.index >= image_.size() || seen[v.index]) throw InvalidArgument("not a permutation");
    seen[v.index] = true;
  }
}

bool VertexPermutation::is_identity() const { return moved_count() == 0; }

std::size_t VertexPermutation::moved_count() const {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) moved += image_[i].index != i;
  return moved;
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<VertexId> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i].index] = VertexId{static_cast<std::uint32_t>(i)};
  return VertexPermutation(std::move(inv));
}

VertexPermutation VertexPermutation::then(const VertexPermutation& b) const {
  if (b.size() != size()) throw InvalidArgument("permutation sizes differ");
  std::vector<VertexId> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = b(image_[i]);
  return VertexPermutation(std::move(out));
}

std::size_t VertexPermutation::order() const {
  std::size_t k = 1;
  VertexPermutation power = *this;
  while (!power.is_identity()) {
    power = power.then(*this);
    ++k;
  }
  return k;
}

bool is_automorphism(const Graph& g, const VertexPermutation& sigma) {
  if (sigma.size() != g.size()) return false;
  // A bijection mapping edges into edges on a finite graph maps them onto.
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(sigma(u), sigma(v))) return false;
  }
  return true;
}

VertexPermutation pair_swap_automorphism(const std::set<NaturalPair>& r_edges, const Graph& g) {
  auto image = VertexPermutation::identity(g.size()).image();
  for (const NaturalPair& pr : r_edges) {
    if (!g.has_gadget(pr)) {
      throw InvalidArgument("no gadget for pair {" + std::to_string(pr.lo) + "," + std::to_string(pr.hi) +
                            "} in the fragment");
    }
    auto swap = [&](Level a, Level b) {
      const VertexId va = g.id_of(Vertex::gadget(pr, a));
      const VertexId vb = g.id_of(Vertex::gadget(pr, b));
      image[va.index] = vb;
      image[vb.index] = va;
    };
    swap(Level::L1, Level::L1_75);
    swap(Level::L1_25, Level::L1_5);
  }
  VertexPermutation sigma(std::move(image));
  if (!is_automorphism(g, sigma)) {
    throw InternalError("pair swap is not an automorphism: malformed fragment");
  }
  return sigma;
}

}  // namespace mekler
