#include "mekler/subgroup.hpp"

namespace mekler {

std::uint32_t EdgeFunctional::value(const Vertex& v) const {
  if (v.is_natural()) return 0;
  if (v.level() == Level::L0 && r_edges_.count(v.pair())) return 0;
  return 1;
}

Coset EdgeFunctional::as_row(const GroupContext& ctx) const {
  std::vector<Coset::Entry> entries;
  for (std::uint32_t i = 0; i < ctx.num_vertices(); ++i) {
    if (value(ctx.vertex(VertexId{i})) != 0) entries.emplace_back(VertexId{i}, 1u);
  }
  return Coset::from_sorted(ctx.p(), std::move(entries));
}

std::uint32_t ell_hat(const GroupContext& ctx, const EdgeFunctional& ell, const Coset& a) {
  const std::uint32_t p = ctx.p().value();
  std::uint64_t acc = 0;
  for (const auto& [v, c] : a.entries()) acc += static_cast<std::uint64_t>(c) * ell.value(ctx.vertex(v));
  return static_cast<std::uint32_t>(acc % p);
}

FpScalar ell_hat(const GroupContext& ctx, const EdgeFunctional& ell, const GroupElement& a) {
  return FpScalar(ell_hat(ctx, ell, a.gen), ctx.p());
}

bool in_h_gamma(const GroupContext& ctx, const EdgeFunctional& ell, const GroupElement& a) {
  return ell_hat(ctx, ell, a.gen) == 0;
}

IndexReport verify_index_p(const GroupContext& ctx, const EdgeFunctional& ell) {
  IndexReport r;
  const auto n = static_cast<std::uint32_t>(ctx.num_vertices());
  for (std::uint32_t i = 0; i < n; ++i) r.value_one_vertices += ell.value(ctx.vertex(VertexId{i})) != 0;
  r.surjective = r.value_one_vertices > 0;
  r.homomorphism = true;
  r.kills_commutators = true;
  for (std::uint32_t i = 0; i < n; ++i) {
    const GroupElement xu = generator(ctx, VertexId{i});
    const auto lu = ell_hat(ctx, ell, xu);
    for (std::uint32_t j = 0; j < n; ++j) {
      const GroupElement xv = generator(ctx, VertexId{j});
      if (ell_hat(ctx, ell, mul(ctx, xu, xv)) != lu + ell_hat(ctx, ell, xv)) r.homomorphism = false;
      if (i < j && ell_hat(ctx, ell, commutator(ctx, xu, xv)).value() != 0) r.kills_commutators = false;
    }
  }
  if (!r.surjective) {
    r.message = "index 1 in fragment: the functional vanishes on every generator";
  } else if (!r.index_p()) {
    r.message = "functional is not a homomorphism killing commutators";
  } else {
    r.message = "kernel has index " + std::to_string(ctx.p().value()) + " (" +
                std::to_string(r.value_one_vertices) + " value-1 generators)";
  }
  return r;
}

CenterCheckReport center_of_subgroup_check(const GroupContext& ctx, const EdgeFunctional& ell,
                                           std::size_t support_budget) {
  const auto n = static_cast<std::uint32_t>(ctx.num_vertices());
  const std::uint32_t p = ctx.p().value();
  std::vector<Coset> naturals, others;
  std::optional<VertexId> anchor;  // first value-1 vertex
  for (std::uint32_t i = 0; i < n; ++i) {
    const Vertex& v = ctx.vertex(VertexId{i});
    const auto single = Coset::from_sorted(ctx.p(), {{VertexId{i}, 1u}});
    if (v.is_natural()) {
      naturals.push_back(single);
    } else if (ell.value(v) == 0) {
      others.push_back(single);
    } else if (!anchor) {
      anchor = VertexId{i};
    } else {
      others.push_back(Coset::from_terms(ctx.p(), {{VertexId{i}, 1}, {*anchor, p - 1}}));
    }
  }

  CenterCheckReport r;
  enumerate_cosets(ctx, support_budget, [&](const Coset& a) {
    if (ell_hat(ctx, ell, a) != 0) return;
    ++r.checked;
    for (const auto& w : naturals) {
      if (!commute_mod_center(ctx, a, w)) {
        ++r.witnessed_by_naturals;
        return;
      }
    }
    for (const auto& w : others) {
      if (!commute_mod_center(ctx, a, w)) {
        ++r.witnessed_by_other;
        return;
      }
    }
    r.holds = false;
    r.unwitnessed.push_back(a);
  });
  return r;
}

CentralizerDim centralizer_dim_in_subgroup(const GroupContext& ctx, const EdgeFunctional& ell,
                                           const GroupElement& a) {
  if (!in_h_gamma(ctx, ell, a)) throw InvalidArgument("centralizer_dim_in_subgroup: element not in H_R");
  if (is_central(a)) return {ctx.num_vertices() - (ell.as_row(ctx).empty() ? 0 : 1), true};
  auto system = centralizer_system(ctx, a.gen);
  std::vector<Coset::Entry> restricted;
  for (const VertexId& c : system.columns()) {
    if (ell.value(ctx.vertex(c)) != 0) restricted.emplace_back(c, 1u);
  }
  if (!restricted.empty()) system.add_row(system.num_rows(), Coset::from_sorted(ctx.p(), std::move(restricted)));
  return {kernel_dim(system), false};
}

Adequacy subgroup_adequacy(const GroupContext& ctx, std::size_t required) {
  const Graph& g = ctx.graph();
  const auto naturals = g.naturals();
  const auto pairs = g.gadget_pairs();
  Adequacy a;
  for (Natural n : naturals) {
    std::size_t partners = 0;
    for (Natural m : naturals) {
      if (m != n && pairs.count(NaturalPair::of(n, m)) && g.has_gadget(NaturalPair::of(n, m))) ++partners;
    }
    if (partners < required) a.short_naturals.push_back(n);
  }
  a.adequate = !naturals.empty() && a.short_naturals.empty();
  if (naturals.empty()) {
    a.message = "inconclusive fragment: no naturals";
  } else if (!a.adequate) {
    a.message = "inconclusive fragment: " + std::to_string(a.short_naturals.size()) +
                " natural(s) have fewer than " + std::to_string(required) +
                " gadgeted partners (first: " + std::to_string(a.short_naturals.front()) + ")";
  } else {
    a.message = "adequate: every natural has at least " + std::to_string(required) + " gadgeted partners";
  }
  return a;
}

bool is_natural_vertex_like_definably(const GroupContext& ctx, const EdgeFunctional& ell,
                                      const GroupElement& a, const Adequacy& adequacy) {
  if (!adequacy.adequate) throw InadequateFragment(adequacy.message);
  if (is_central(a)) throw InvalidArgument("is_natural_vertex_like_definably: central input");
  return centralizer_dim_in_subgroup(ctx, ell, a).dim >= kNaturalCentralizerThreshold;
}

bool is_natural_vertex_like_definably(const GroupContext& ctx, const EdgeFunctional& ell,
                                      const GroupElement& a) {
  return is_natural_vertex_like_definably(ctx, ell, a, subgroup_adequacy(ctx));
}

}  // namespace mekler
