#include "doctest.h"
#include "mekler/subgroup.hpp"

using namespace mekler;

namespace {

Vertex nat(Natural n) { return Vertex::natural(n); }
Vertex gad(Natural a, Natural b, Level l) { return Vertex::gadget(NaturalPair::of(a, b), l); }

std::set<Natural> range(Natural n) {
  std::set<Natural> s;
  for (Natural i = 0; i < n; ++i) s.insert(i);
  return s;
}

// The same dimension through the generic route: full bracket rows plus the
// functional over every vertex.
std::size_t generic_subgroup_dim(const GroupContext& ctx, const EdgeFunctional& ell, const Coset& a) {
  auto m = bracket_matrix(ctx, a);
  const Coset row = ell.as_row(ctx);
  if (!row.empty()) m.add_row(CentralPair{}, row);
  return kernel_dim(m);
}

std::size_t brute_subgroup_dim(const GroupContext& ctx, const EdgeFunctional& ell, const GroupElement& a) {
  const std::uint32_t p = ctx.p().value();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ctx.num_vertices(); ++i) total *= p;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::pair<VertexId, std::int64_t>> terms;
    std::uint64_t rest = code;
    for (std::uint32_t i = 0; i < ctx.num_vertices(); ++i) {
      terms.emplace_back(VertexId{i}, static_cast<std::int64_t>(rest % p));
      rest /= p;
    }
    const auto b = from_coset(ctx, Coset::from_terms(ctx.p(), terms));
    count += in_h_gamma(ctx, ell, b) && mul(ctx, a, b) == mul(ctx, b, a);
  }
  std::size_t d = 0;
  for (; count > 1; count /= p) ++d;
  return d;
}

}  // namespace

TEST_CASE("functional values and membership") {
  const GroupContext ctx(build_full_fragment(range(6)), Prime(3));
  const EdgeFunctional ell({NaturalPair::of(2, 3)});
  CHECK(ell_hat(ctx, ell, generator(ctx, nat(5))).value() == 0);
  CHECK(ell_hat(ctx, ell, generator(ctx, gad(0, 1, Level::L0))).value() == 1);
  CHECK(ell_hat(ctx, ell, generator(ctx, gad(2, 3, Level::L0))).value() == 0);
  const auto two = mul(ctx, generator(ctx, gad(0, 1, Level::L1)), generator(ctx, gad(0, 1, Level::L1_5)));
  CHECK(ell_hat(ctx, ell, two).value() == 2);

  Rng rng(2);
  CHECK(in_h_gamma(ctx, ell, random_central(ctx, rng)));
  CHECK(in_h_gamma(ctx, ell, generator(ctx, nat(4))));
  CHECK(in_h_gamma(ctx, ell, generator(ctx, gad(2, 3, Level::L0))));
  CHECK_FALSE(in_h_gamma(ctx, ell, generator(ctx, gad(2, 3, Level::L1))));
}

TEST_CASE("functional is a homomorphism; H_R is closed and coset-invariant") {
  const GroupContext ctx(build_full_fragment(range(4)), Prime(5));
  const EdgeFunctional ell({NaturalPair::of(0, 1), NaturalPair::of(2, 3)});
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_element(ctx, rng);
    const auto b = random_element(ctx, rng);
    const auto z = random_central(ctx, rng);
    CHECK(ell_hat(ctx, ell, mul(ctx, a, b)) == ell_hat(ctx, ell, a) + ell_hat(ctx, ell, b));
    CHECK(ell_hat(ctx, ell, commutator(ctx, a, b)).value() == 0);
    CHECK(in_h_gamma(ctx, ell, mul(ctx, a, z)) == in_h_gamma(ctx, ell, a));
    // Project a and b into H_R by correcting with a value-1 generator.
    const auto fix = generator(ctx, gad(0, 2, Level::L1));
    const auto am = mul(ctx, a, pow(ctx, fix, -static_cast<std::int64_t>(ell_hat(ctx, ell, a).value())));
    const auto bm = mul(ctx, b, pow(ctx, fix, -static_cast<std::int64_t>(ell_hat(ctx, ell, b).value())));
    REQUIRE(in_h_gamma(ctx, ell, am));
    REQUIRE(in_h_gamma(ctx, ell, bm));
    CHECK(in_h_gamma(ctx, ell, mul(ctx, am, bm)));
    CHECK(in_h_gamma(ctx, ell, inv(ctx, am)));
  }
}

TEST_CASE("verify_index_p") {
  const GroupContext ctx(build_full_fragment(range(3)), Prime(3));
  const auto all = all_pairs(range(3));
  const EdgeFunctional full(all);
  const auto r = verify_index_p(ctx, full);
  CHECK(r.index_p());
  CHECK(r.value_one_vertices == 12);

  const GroupContext bare(build_a_fragment(range(3), {}), Prime(3));
  const auto d = verify_index_p(bare, EdgeFunctional({}));
  CHECK(d.degenerate());
  CHECK_FALSE(d.index_p());
  CHECK(d.message.find("index 1 in fragment") != std::string::npos);
}

TEST_CASE("center of the subgroup equals the center of H at small supports") {
  const auto pairs = all_pairs(range(4));
  const std::vector<NaturalPair> pv(pairs.begin(), pairs.end());
  const GroupContext ctx(build_full_fragment(range(4)), Prime(3));
  for (unsigned mask : {0u, 1u, 0b100101u, 0b111111u}) {
    std::set<NaturalPair> r;
    for (std::size_t i = 0; i < pv.size(); ++i)
      if (mask >> i & 1u) r.insert(pv[i]);
    const auto rep = center_of_subgroup_check(ctx, EdgeFunctional(r), 2);
    CHECK(rep.holds);
    CHECK(rep.unwitnessed.empty());
    CHECK(rep.checked == rep.witnessed_by_naturals + rep.witnessed_by_other);
  }
  // x_0 x_1^-1 is witnessed by a natural.
  const EdgeFunctional ell({});
  const auto a = mul(ctx, generator(ctx, nat(0)), inv(ctx, generator(ctx, nat(1))));
  bool witnessed = false;
  for (Natural n = 0; n < 4; ++n) witnessed = witnessed || commutator(ctx, a, generator(ctx, nat(n))) != identity(ctx);
  CHECK(witnessed);
}

TEST_CASE("subgroup centralizer: fast system, generic matrix and brute force agree") {
  const GroupContext small(build_full_fragment(range(2)), Prime(3));
  for (const auto& r : {std::set<NaturalPair>{}, std::set<NaturalPair>{NaturalPair::of(0, 1)}}) {
    const EdgeFunctional ell(r);
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
      auto a = random_element(small, rng);
      const auto fix = generator(small, gad(0, 1, Level::L1_25));
      a = mul(small, a, pow(small, fix, -static_cast<std::int64_t>(ell_hat(small, ell, a).value())));
      if (is_central(a)) continue;
      const auto d = centralizer_dim_in_subgroup(small, ell, a).dim;
      CHECK(d == brute_subgroup_dim(small, ell, a));
      CHECK(d == generic_subgroup_dim(small, ell, a.gen));
      CHECK(d <= centralizer_dim_mod_center(small, a).dim);
    }
  }

  const GroupContext ctx(build_full_fragment(range(5)), Prime(3));
  const EdgeFunctional ell({NaturalPair::of(0, 1), NaturalPair::of(1, 4)});
  std::size_t n = 0;
  enumerate_cosets(ctx, 2, [&](const Coset& c) {
    if (ell_hat(ctx, ell, c) != 0) return;
    const auto a = from_coset(ctx, c);
    if (n++ % 7 != 0) return;
    CHECK(centralizer_dim_in_subgroup(ctx, ell, a).dim == generic_subgroup_dim(ctx, ell, c));
  });
  CHECK_THROWS_AS(centralizer_dim_in_subgroup(ctx, ell, generator(ctx, gad(0, 2, Level::L0))), InvalidArgument);
  const auto central = centralizer_dim_in_subgroup(ctx, ell, identity(ctx));
  CHECK(central.central_input);
  CHECK(central.dim == ctx.num_vertices() - 1);
}

TEST_CASE("adequacy") {
  const GroupContext small(build_full_fragment(range(4)), Prime(3));
  const auto a = subgroup_adequacy(small);
  CHECK_FALSE(a.adequate);
  CHECK(a.short_naturals.size() == 4);
  CHECK_THROWS_AS(is_natural_vertex_like_definably(small, EdgeFunctional({}), generator(small, nat(0))),
                  InadequateFragment);

  const GroupContext big(build_full_fragment(range(8)), Prime(3));
  CHECK(subgroup_adequacy(big).adequate);
  std::set<NaturalPair> missing = all_pairs(range(8));
  missing.erase(NaturalPair::of(0, 1));
  const GroupContext holed(build_a_fragment(range(8), missing), Prime(3));
  const auto h = subgroup_adequacy(holed);
  CHECK_FALSE(h.adequate);
  CHECK(h.short_naturals == std::vector<Natural>{0, 1});
}

TEST_CASE("definable natural vertex-likeness matches the syntactic test") {
  const GroupContext ctx(build_full_fragment(range(8)), Prime(3));
  for (const auto& r : {std::set<NaturalPair>{}, std::set<NaturalPair>{NaturalPair::of(0, 1), NaturalPair::of(2, 5)},
                        all_pairs(range(8))}) {
    const EdgeFunctional ell(r);
    const auto adequacy = subgroup_adequacy(ctx);
    std::size_t checked = 0, mismatches = 0;
    enumerate_cosets(ctx, 2, [&](const Coset& c) {
      if (ell_hat(ctx, ell, c) != 0) return;
      ++checked;
      const bool syntactic = c.size() == 1 && ctx.vertex(c.entries()[0].first).is_natural();
      if (is_natural_vertex_like_definably(ctx, ell, from_coset(ctx, c), adequacy) != syntactic) ++mismatches;
    });
    CHECK(checked > 0);
    CHECK(mismatches == 0);
  }
  const EdgeFunctional ell({NaturalPair::of(0, 1)});
  Rng rng(3);
  const auto x3 = mul(ctx, pow(ctx, generator(ctx, nat(3)), 2), random_central(ctx, rng));
  CHECK(is_natural_vertex_like_definably(ctx, ell, x3));
  CHECK_FALSE(is_natural_vertex_like_definably(ctx, ell, generator(ctx, gad(0, 1, Level::L0))));
  CHECK_FALSE(is_natural_vertex_like_definably(ctx, ell, mul(ctx, generator(ctx, nat(0)), generator(ctx, nat(1)))));
  CHECK_THROWS_AS(is_natural_vertex_like_definably(ctx, ell, identity(ctx)), InvalidArgument);
}
