#include "doctest.h"
#include "mekler/error.hpp"
#include "mekler/graph.hpp"
#include "mekler/graph_io.hpp"
#include "mekler/random.hpp"

using namespace mekler;

namespace {

Vertex nat(Natural n) { return Vertex::natural(n); }
Vertex gad(Natural a, Natural b, Level l) { return Vertex::gadget(NaturalPair::of(a, b), l); }

Graph natural_graph(std::size_t n, const std::vector<std::pair<Natural, Natural>>& edges) {
  std::vector<Vertex> vs;
  for (Natural i = 0; i < n; ++i) vs.push_back(nat(i));
  std::vector<std::pair<Vertex, Vertex>> es;
  for (auto [a, b] : edges) es.emplace_back(nat(a), nat(b));
  return Graph(vs, es);
}

// Independent triangle/square search over all vertex subsets.
bool has_triangle_brute(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.size());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      for (std::uint32_t c = b + 1; c < n; ++c)
        if (g.adjacent({a}, {b}) && g.adjacent({b}, {c}) && g.adjacent({a}, {c})) return true;
  return false;
}

bool has_square_brute(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.size());
  auto adj = [&](std::uint32_t x, std::uint32_t y) { return g.adjacent({x}, {y}); };
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      for (std::uint32_t c = b + 1; c < n; ++c)
        for (std::uint32_t d = c + 1; d < n; ++d) {
          // The three 4-cycles on {a,b,c,d}.
          if (adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a)) return true;
          if (adj(a, b) && adj(b, d) && adj(d, c) && adj(c, a)) return true;
          if (adj(a, c) && adj(c, b) && adj(b, d) && adj(d, a)) return true;
        }
  return false;
}

}  // namespace

TEST_CASE("vertex order and encoding") {
  CHECK(nat(5) < gad(0, 1, Level::L0));
  CHECK(nat(2) < nat(5));
  CHECK(gad(0, 1, Level::L1_75) < gad(0, 2, Level::L0));
  CHECK(gad(0, 1, Level::L0) < gad(0, 1, Level::L1));
  CHECK(gad(1, 0, Level::L0) == gad(0, 1, Level::L0));
  CHECK_THROWS_AS(NaturalPair::of(3, 3), InvalidArgument);
  CHECK(nat(3).encode() == "n:3");
  CHECK(gad(0, 1, Level::L1_25).encode() == "g:0,1:1.25");
  for (Level l : kAllLevels) {
    const Vertex v = gad(2, 7, l);
    CHECK(Vertex::decode(v.encode()) == v);
  }
  CHECK(Vertex::decode("n:12") == nat(12));
  CHECK_THROWS_AS(Vertex::decode("g:1,1:0"), ParseError);
  CHECK_THROWS(Vertex::decode("g:0,1:2"));
  CHECK_THROWS(Vertex::decode("x:1"));
}

TEST_CASE("degree classes come from the constructor tag") {
  CHECK(degree_class(nat(0)).infinite);
  CHECK(degree_class(gad(0, 1, Level::L0)) == DegreeClass{false, 4});
  for (Level l : {Level::L1, Level::L1_25, Level::L1_5, Level::L1_75}) {
    CHECK(degree_class(gad(0, 1, l)) == DegreeClass{false, 2});
  }
}

TEST_CASE("build_a_fragment examples") {
  const Graph g1 = build_a_fragment({0, 1}, {NaturalPair::of(0, 1)});
  CHECK(g1.size() == 7);
  CHECK(g1.num_edges() == 7);
  const Graph g0 = build_a_fragment({0}, {});
  CHECK(g0.size() == 1);
  CHECK(g0.num_edges() == 0);
  const Graph g3 = build_full_fragment({0, 1, 2});
  CHECK(g3.size() == 18);
  CHECK(g3.num_edges() == 21);
  CHECK_THROWS_AS(build_a_fragment({0, 1}, {NaturalPair::of(0, 2)}), InvalidArgument);

  const Graph g4 = build_full_fragment({0, 1, 2, 3});
  CHECK(g4.size() == 34);
  for (const auto& pr : g4.gadget_pairs()) {
    CHECK(g4.degree(g4.id_of(Vertex::gadget(pr, Level::L0))) == 4);
    for (Level l : {Level::L1, Level::L1_25, Level::L1_5, Level::L1_75}) {
      CHECK(g4.degree(g4.id_of(Vertex::gadget(pr, l))) == 2);
    }
  }
  CHECK(g4.adjacent(g4.id_of(nat(0)), g4.id_of(gad(0, 3, Level::L0))));
  CHECK_FALSE(g4.adjacent(g4.id_of(nat(0)), g4.id_of(gad(1, 3, Level::L0))));
  CHECK(g4.adjacent(g4.id_of(gad(1, 3, Level::L1_75)), g4.id_of(gad(1, 3, Level::L0))));
}

TEST_CASE("check_nice examples") {
  const auto k3 = check_nice(natural_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK_FALSE(k3.triangle_free);
  CHECK(k3.triangle.has_value());
  CHECK_FALSE(k3.is_nice);

  const auto c4 = check_nice(natural_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(c4.triangle_free);
  CHECK_FALSE(c4.square_free);
  REQUIRE(c4.square.has_value());
  CHECK(c4.square->size() == 4);
  CHECK_FALSE(c4.is_nice);

  CHECK(check_nice(build_full_fragment({0, 1, 2, 3})).is_nice);
  CHECK(check_nice(build_full_fragment({0, 1, 2})).is_nice);

  // Two naturals with one gadget: the pentagon vertices fail separation.
  const auto small = check_nice(build_full_fragment({0, 1}));
  CHECK(small.triangle_free);
  CHECK(small.square_free);
  CHECK_FALSE(small.separation_witness_failures.empty());
  CHECK_FALSE(small.is_nice);

  const auto single = check_nice(build_a_fragment({0}, {}));
  CHECK_FALSE(single.enough_vertices);
  CHECK_FALSE(single.is_nice);
}

TEST_CASE("niceness agrees with brute-force subset search on random graphs") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng.below(6);
    std::vector<std::pair<Natural, Natural>> edges;
    for (Natural a = 0; a < n; ++a)
      for (Natural b = a + 1; b < n; ++b)
        if (rng.below(3) == 0) edges.emplace_back(a, b);
    const Graph g = natural_graph(n, edges);
    const auto r = check_nice(g);
    CHECK(r.triangle_free == !has_triangle_brute(g));
    CHECK(r.square_free == !has_square_brute(g));
    CHECK(r.is_nice == (r.enough_vertices && r.triangle_free && r.square_free &&
                        r.separation_witness_failures.empty()));
  }
}

TEST_CASE("planted triangles and squares are rejected") {
  Rng rng(5);
  const Graph base = build_full_fragment({0, 1, 2});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vertex> vs = base.vertices();
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto [a, b] : base.edges()) es.emplace_back(base.vertex(a), base.vertex(b));
    const bool square = rng.coin();
    const std::size_t k = square ? 4 : 3;
    std::vector<Vertex> pick;
    while (pick.size() < k) {
      const Vertex v = vs[rng.below(vs.size())];
      if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
    }
    for (std::size_t i = 0; i < k; ++i) es.emplace_back(pick[i], pick[(i + 1) % k]);
    const auto r = check_nice(Graph(vs, es));
    if (square) {
      CHECK_FALSE(r.square_free);
    } else {
      CHECK_FALSE(r.triangle_free);
    }
    CHECK_FALSE(r.is_nice);
  }
}

TEST_CASE("pair_swap_automorphism") {
  const Graph g7 = build_full_fragment({0, 1});
  const auto id = pair_swap_automorphism({}, g7);
  CHECK(id.is_identity());
  const auto s = pair_swap_automorphism({NaturalPair::of(0, 1)}, g7);
  CHECK(s.order() == 2);
  CHECK(s.moved_count() == 4);
  CHECK(s.then(s).is_identity());
  CHECK(s(g7.id_of(gad(0, 1, Level::L1))) == g7.id_of(gad(0, 1, Level::L1_75)));
  CHECK(s(g7.id_of(gad(0, 1, Level::L1_25))) == g7.id_of(gad(0, 1, Level::L1_5)));
  CHECK_THROWS_AS(pair_swap_automorphism({NaturalPair::of(0, 2)}, g7), InvalidArgument);

  // Every R on the 4-natural fragment: edge-preserving involution, checked pair by pair.
  const Graph g = build_full_fragment({0, 1, 2, 3});
  const auto pairs = all_pairs({0, 1, 2, 3});
  const std::vector<NaturalPair> pv(pairs.begin(), pairs.end());
  for (unsigned mask = 0; mask < (1u << pv.size()); ++mask) {
    std::set<NaturalPair> r;
    for (std::size_t i = 0; i < pv.size(); ++i)
      if (mask >> i & 1u) r.insert(pv[i]);
    const auto sigma = pair_swap_automorphism(r, g);
    CHECK(sigma.then(sigma).is_identity());
    CHECK(sigma.moved_count() == 4 * r.size());
    bool preserved = true;
    for (std::uint32_t a = 0; a < g.size(); ++a)
      for (std::uint32_t b = 0; b < g.size(); ++b)
        preserved = preserved && g.adjacent({a}, {b}) == g.adjacent(sigma({a}), sigma({b}));
    CHECK(preserved);
  }
}

TEST_CASE("vertex permutations") {
  const VertexPermutation c({VertexId{1}, VertexId{2}, VertexId{0}});
  CHECK(c.order() == 3);
  CHECK(c.then(c.inverse()).is_identity());
  CHECK(c.then(c)(VertexId{0}) == VertexId{2});
  CHECK_THROWS_AS(VertexPermutation({VertexId{0}, VertexId{0}}), InvalidArgument);
  const Graph path = natural_graph(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_automorphism(path, c));
  CHECK(is_automorphism(path, VertexPermutation({VertexId{2}, VertexId{1}, VertexId{0}})));
}

TEST_CASE("graph documents") {
  const auto doc = parse_graph_document(R"({"p": 5, "naturals": [0, 1, 2], "gadget_pairs": [[0, 1], [1, 2]],
    "extra_edges": [["n:0", "n:2"]]})");
  CHECK(doc.p == 5u);
  const Graph g = doc.build();
  CHECK(g.size() == 13);
  CHECK(g.num_edges() == 15);
  CHECK(g.adjacent(g.id_of(nat(0)), g.id_of(nat(2))));
  const auto ng = doc.natural_graph();
  CHECK(ng.vertices == std::set<Natural>{0, 1, 2});
  CHECK(ng.edges == std::set<NaturalPair>{NaturalPair::of(0, 2)});

  const auto again = parse_graph_document(to_json_text(doc));
  CHECK(again.build() == g);
  CHECK(again.p == doc.p);

  const auto with_r = parse_graph_document(R"({"naturals": [0, 1], "gadget_pairs": [[0, 1]], "r_edges": [[1, 0]]})");
  CHECK(with_r.natural_graph().edges == std::set<NaturalPair>{NaturalPair::of(0, 1)});

  CHECK_THROWS_AS(parse_graph_document("{"), ParseError);
  CHECK_THROWS(parse_graph_document(R"({"naturals": [0], "gadget_pairs": [[0, 1]]})"));
  CHECK_THROWS(parse_graph_document(R"({"naturals": [0, 1], "gadget_pairs": [[0, 0]]})"));
}
