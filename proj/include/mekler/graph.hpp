#pragma once

// Finite graphs, Mekler niceness, finite fragments of the pentagon-gadget
// graph A, and the pair-swap automorphism.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mekler/error.hpp"

namespace mekler {

using Natural = std::uint32_t;

// Unordered pair {lo, hi} of distinct naturals, stored with lo < hi.
struct NaturalPair {
  Natural lo;
  Natural hi;

  static NaturalPair of(Natural a, Natural b);

  bool contains(Natural n) const noexcept { return lo == n || hi == n; }

  friend auto operator<=>(const NaturalPair&, const NaturalPair&) = default;
};

std::set<NaturalPair> all_pairs(const std::set<Natural>& naturals);

// Position on the pentagon attached to a pair: 0, 1, 1.25, 1.5, 1.75.
enum class Level : std::uint8_t { L0, L1, L1_25, L1_5, L1_75 };

inline constexpr Level kAllLevels[] = {Level::L0, Level::L1, Level::L1_25, Level::L1_5,
                                       Level::L1_75};

std::string_view level_name(Level l);
Level parse_level(std::string_view s);

class Vertex {
 public:
  static Vertex natural(Natural n) { return Vertex(NaturalTag{n}); }
  static Vertex gadget(NaturalPair pair, Level level) { return Vertex(GadgetTag{pair, level}); }

  bool is_natural() const noexcept { return rep_.index() == 0; }
  Natural natural_value() const;
  NaturalPair pair() const;
  Level level() const;

  // "n:<int>" or "g:<a>,<b>:<level>".
  std::string encode() const;
  static Vertex decode(std::string_view s);

  // Naturals before gadgets; naturals by value; gadgets by (lo, hi, level).
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  struct NaturalTag {
    Natural n;
    friend auto operator<=>(const NaturalTag&, const NaturalTag&) = default;
  };
  struct GadgetTag {
    NaturalPair pair;
    Level level;
    friend auto operator<=>(const GadgetTag&, const GadgetTag&) = default;
  };

  explicit Vertex(NaturalTag t) : rep_(t) {}
  explicit Vertex(GadgetTag t) : rep_(t) {}

  std::variant<NaturalTag, GadgetTag> rep_;
};

// Index of a vertex in a graph's vertex order.
struct VertexId {
  std::uint32_t index;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// Degree of a vertex in the infinite graph A, read off its constructor tag.
struct DegreeClass {
  bool infinite;
  std::uint32_t degree_in_a;  // meaningful only when !infinite

  friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
};

DegreeClass degree_class(const Vertex& v);

// Simple undirected graph on an ordered vertex set.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(VertexId id) const { return vertices_.at(id.index); }
  std::optional<VertexId> find(const Vertex& v) const;
  VertexId id_of(const Vertex& v) const;  // throws if absent

  bool adjacent(VertexId a, VertexId b) const {
    return (adjacency_[a.index][b.index / 64] >> (b.index % 64)) & 1u;
  }
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_[v.index]; }
  std::size_t degree(VertexId v) const { return neighbors_[v.index].size(); }
  // Adjacency bitset, words of 64 vertices.
  std::span<const std::uint64_t> adjacency_row(VertexId v) const { return adjacency_[v.index]; }
  std::size_t num_words() const noexcept { return words_; }

  std::size_t num_edges() const noexcept { return edges_.size(); }
  // Edges as (a, b) with a < b, sorted.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }

  std::set<Natural> naturals() const;
  std::set<NaturalPair> gadget_pairs() const;
  bool has_gadget(NaturalPair pair) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::vector<std::uint64_t>> adjacency_;
  std::size_t words_ = 0;
};

// A graph whose vertices are naturals: the input boundary for the
// interpretation round trips, and the R of pi_R and l_R.
struct NaturalGraph {
  std::set<Natural> vertices;
  std::set<NaturalPair> edges;

  friend bool operator==(const NaturalGraph&, const NaturalGraph&) = default;
};

struct NicenessReport {
  bool enough_vertices = false;  // at least two vertices
  bool triangle_free = false;
  bool square_free = false;
  // Ordered pairs (v, u) with no third vertex adjacent to v but not to u.
  std::vector<std::pair<VertexId, VertexId>> separation_witness_failures;
  std::optional<std::vector<VertexId>> triangle;
  std::optional<std::vector<VertexId>> square;  // 4-cycle in cyclic order
  bool is_nice = false;
};

NicenessReport check_nice(const Graph& g);

// Naturals, plus the five pentagon vertices and two spokes per requested pair.
Graph build_a_fragment(const std::set<Natural>& naturals, const std::set<NaturalPair>& gadget_pairs);

// Fully gadgeted fragment on the given naturals.
Graph build_full_fragment(const std::set<Natural>& naturals);

// Permutation of a graph's vertex ids.
class VertexPermutation {
 public:
  static VertexPermutation identity(std::size_t n);
  explicit VertexPermutation(std::vector<VertexId> image);

  std::size_t size() const noexcept { return image_.size(); }
  VertexId operator()(VertexId v) const { return image_.at(v.index); }
  const std::vector<VertexId>& image() const noexcept { return image_; }

  bool is_identity() const;
  std::size_t moved_count() const;
  VertexPermutation inverse() const;
  // (a.then(b))(v) = b(a(v)).
  VertexPermutation then(const VertexPermutation& b) const;
  std::size_t order() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<VertexId> image_;
};

bool is_automorphism(const Graph& g, const VertexPermutation& sigma);

// Swaps (p,1)<->(p,1.75) and (p,1.25)<->(p,1.5) for every p in r_edges.
VertexPermutation pair_swap_automorphism(const std::set<NaturalPair>& r_edges, const Graph& g);

}  // namespace mekler
