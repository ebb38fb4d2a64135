#include "mekler/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mekler/extension.hpp"
#include "json.hpp"

namespace mekler {

namespace {

std::string join_naturals(const std::set<Natural>& ns) {
  std::string out;
  for (Natural n : ns) out += (out.empty() ? "" : ",") + std::to_string(n);
  return "{" + out + "}";
}

std::string join_pairs(const std::set<NaturalPair>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ",") + std::to_string(p.lo) + "-" + std::to_string(p.hi);
  return "{" + out + "}";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Tallies a family of assertions and keeps the first counterexamples.
struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;

  template <class Describe>
  void record(bool ok, Describe&& describe) {
    ++checked;
    if (ok) return;
    ++failures;
    if (examples.size() < kMaxCounterexamples) examples.push_back(describe());
  }

  void into(Section& s, std::string name) const {
    auto& c = s.check(std::move(name), failures == 0 && checked > 0,
                      std::to_string(checked) + " checked, " + std::to_string(failures) + " failures");
    c.counterexamples = examples;
  }
};

std::vector<std::uint32_t> all_primes(const RunConfig& c) {
  std::vector<std::uint32_t> ps{c.p};
  for (auto q : c.extra_primes)
    if (std::find(ps.begin(), ps.end(), q) == ps.end()) ps.push_back(q);
  return ps;
}

std::set<NaturalPair> adequate_pairs(const std::set<Natural>& naturals, const std::set<NaturalPair>& base,
                                     const std::set<Natural>& aux) {
  std::set<NaturalPair> out = base;
  for (const auto& pr : all_pairs(naturals))
    if (aux.count(pr.lo) || aux.count(pr.hi)) out.insert(pr);
  return out;
}

GroupElement vertex_power(const GroupContext& ctx, Natural n, std::int64_t e, const GroupElement& z) {
  return mul(ctx, pow(ctx, generator(ctx, Vertex::natural(n)), e), z);
}

// Largest value of dim C_H(a)/Z(H) allowed away from single naturals: max{3, n0 + 1}.
constexpr std::size_t kDimBound = 5;

void group_law_section(Report& rep, const RunConfig& cfg, std::uint32_t p) {
  const GroupContext ctx(build_a_fragment(cfg.naturals, cfg.effective_gadget_pairs()), Prime(p));
  auto& s = rep.section("group laws (p=" + std::to_string(p) + ")");
  s.fact("vertices", std::to_string(ctx.num_vertices()));
  s.fact("samples", std::to_string(cfg.random_samples));
  Rng rng(cfg.seed * 1000003u + p);
  Tally assoc, inverse, exponent, class2, bracket_form;
  const auto e = identity(ctx);
  for (std::size_t i = 0; i < cfg.random_samples; ++i) {
    const auto a = random_element(ctx, rng);
    const auto b = random_element(ctx, rng);
    const auto c = random_element(ctx, rng);
    auto show = [&] { return "a=" + to_string(ctx, a) + " b=" + to_string(ctx, b) + " c=" + to_string(ctx, c); };
    assoc.record(mul(ctx, mul(ctx, a, b), c) == mul(ctx, a, mul(ctx, b, c)), show);
    inverse.record(mul(ctx, a, inv(ctx, a)) == e && mul(ctx, inv(ctx, a), a) == e, show);
    exponent.record(pow(ctx, a, p) == e, show);
    const auto ab = commutator(ctx, a, b);
    class2.record(commutator(ctx, ab, c) == e, show);
    bracket_form.record(ab.gen.empty() && ab.cen == bracket(ctx, a.gen, b.gen), show);
  }
  assoc.into(s, "associativity");
  inverse.into(s, "two-sided inverses");
  exponent.into(s, "exponent p");
  class2.into(s, "nilpotency class 2");
  bracket_form.into(s, "commutator equals the bilinear form");

  Tally relations;
  const auto n = static_cast<std::uint32_t>(ctx.num_vertices());
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      const bool commute = commutator(ctx, generator(ctx, VertexId{u}), generator(ctx, VertexId{v})) == e;
      const bool expected = u == v || ctx.adjacent(VertexId{u}, VertexId{v});
      relations.record(commute == expected, [&] {
        return ctx.vertex(VertexId{u}).encode() + " / " + ctx.vertex(VertexId{v}).encode();
      });
    }
  }
  relations.into(s, "generators commute exactly along edges");
}

void niceness_section(Report& rep, const RunConfig& cfg, const Graph& base, const Graph& adequate) {
  auto& s = rep.section("niceness");
  const auto rb = check_nice(base);
  const auto ra = check_nice(adequate);
  s.fact("base_fragment_vertices", std::to_string(base.size()));
  s.fact("adequate_fragment_vertices", std::to_string(adequate.size()));
  if (cfg.naturals.size() >= 3 && !cfg.gadget_pairs) s.check("base fragment is nice", rb.is_nice);
  else s.fact("base_fragment_nice", yes_no(rb.is_nice));
  s.check("adequate fragment is nice", ra.is_nice);
  const auto pairs = base.gadget_pairs();
  if (pairs.empty()) return;
  const NaturalPair pr = *pairs.begin();
  const Vertex n = Vertex::natural(pr.lo);
  auto plant = [&](std::vector<std::pair<Vertex, Vertex>> extra) {
    std::vector<std::pair<Vertex, Vertex>> es = extra;
    for (auto [a, b] : base.edges()) es.emplace_back(base.vertex(a), base.vertex(b));
    return check_nice(Graph(base.vertices(), es));
  };
  const auto tri = plant({{n, Vertex::gadget(pr, Level::L1)}});
  s.check("planted triangle rejected", !tri.triangle_free && !tri.is_nice);
  const auto sq = plant({{n, Vertex::gadget(pr, Level::L1_25)}});
  s.check("planted square rejected", !sq.square_free && !sq.is_nice);
}

void dimension_section(Report& rep, const RunConfig& cfg) {
  const GroupContext ctx(build_a_fragment(cfg.naturals, cfg.effective_gadget_pairs()), Prime(cfg.p));
  auto& s = rep.section("centralizer dimensions in H");
  s.fact("support_budget", std::to_string(cfg.support_budget));
  Tally bound;
  std::size_t max_dim = 0;
  enumerate_cosets(ctx, cfg.support_budget, [&](const Coset& c) {
    if (c.size() == 1 && ctx.vertex(c.entries()[0].first).is_natural()) return;
    const std::size_t d = kernel_dim(centralizer_system(ctx, c));
    max_dim = std::max(max_dim, d);
    bound.record(d <= kDimBound, [&] { return to_string(ctx, from_coset(ctx, c)) + " dim " + std::to_string(d); });
  });
  s.fact("max_dim_away_from_naturals", std::to_string(max_dim));
  bound.into(s, "dim C_H(a)/Z(H) <= max{3, n0+1} = 5 off single naturals");

  Tally growth;
  const auto pairs = ctx.graph().gadget_pairs();
  for (Natural n : cfg.naturals) {
    const std::size_t partners = static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [&](const NaturalPair& pr) { return pr.contains(n); }));
    const std::size_t d = centralizer_dim_mod_center(ctx, generator(ctx, Vertex::natural(n))).dim;
    growth.record(d == 1 + partners, [&] {
      return "x_" + std::to_string(n) + ": dim " + std::to_string(d) + ", partners " + std::to_string(partners);
    });
  }
  growth.into(s, "dim C_H(x_n)/Z(H) = 1 + #gadgeted partners of n");

  Tally routes;
  Rng rng(cfg.seed * 7919u + 4);
  for (int i = 0; i < 300; ++i) {
    const Coset c = random_coset(ctx, rng);
    if (c.empty()) continue;
    routes.record(kernel_dim(centralizer_system(ctx, c)) == kernel_dim(bracket_matrix(ctx, c)),
                  [&] { return to_string(ctx, from_coset(ctx, c)); });
  }
  routes.into(s, "reduced system agrees with the full bracket matrix");
}

// The three smallest naturals with a single gadget on the smallest pair.
std::optional<std::pair<std::set<Natural>, NaturalPair>> oracle_fragment(const RunConfig& cfg) {
  if (cfg.naturals.size() < 3) return std::nullopt;
  std::set<Natural> ns;
  for (Natural n : cfg.naturals) {
    if (ns.size() == 3) break;
    ns.insert(n);
  }
  return std::pair{ns, NaturalPair::of(*ns.begin(), *std::next(ns.begin()))};
}

template <class Eval, class Oracle>
void oracle_agreement(Section& s, const RunConfig& cfg, std::uint32_t p, const std::string& name, Eval&& make_eval,
                      Oracle&& make_oracle) {
  const auto frag = oracle_fragment(cfg);
  if (!frag) {
    s.notes.push_back("oracle comparison skipped: fewer than 3 naturals");
    return;
  }
  const GroupContext ctx(build_a_fragment(frag->first, {frag->second}), Prime(p));
  Rng rng(cfg.seed * 31u + p);
  Tally agree;
  for (const auto& r : {std::set<NaturalPair>{}, std::set<NaturalPair>{frag->second}}) {
    auto eval = make_eval(ctx, r);
    auto oracle = make_oracle(ctx, r);
    for (Natural n : frag->first) {
      for (Natural m : frag->first) {
        for (std::int64_t g = 1; g < p; ++g) {
          for (std::int64_t d = 1; d < p; ++d) {
            const auto x = vertex_power(ctx, n, g, random_central(ctx, rng));
            const auto y = vertex_power(ctx, m, d, random_central(ctx, rng));
            agree.record(eval(x, y) == oracle(x, y), [&] {
              return "R=" + join_pairs(r) + " x=" + to_string(ctx, x) + " y=" + to_string(ctx, y);
            });
          }
        }
      }
    }
  }
  agree.into(s, name + " agrees with full coset enumeration (" + std::to_string(ctx.num_vertices()) + " vertices)");
}

void going_up_section(Report& rep, const RunConfig& cfg, std::uint32_t p) {
  const GroupContext ctx(build_a_fragment(cfg.naturals, cfg.effective_gadget_pairs()), Prime(p));
  const auto pi = pi_r(ctx, cfg.r_edges);
  auto& s = rep.section("going up: phi_R defines R (p=" + std::to_string(p) + ")");
  Rng rng(cfg.seed * 131u + p);
  Tally equiv, witnesses, exps;
  for (Natural n : cfg.naturals) {
    for (Natural m : cfg.naturals) {
      if (n == m || !ctx.graph().has_gadget(NaturalPair::of(n, m))) continue;
      const bool in_r = cfg.r_edges.count(NaturalPair::of(n, m)) > 0;
      for (std::int64_t g = 1; g < p; ++g) {
        for (std::int64_t d = 1; d < p; ++d) {
          for (std::size_t k = 0; k <= cfg.sample_budget; ++k) {
            const auto x = vertex_power(ctx, n, g, k ? random_central(ctx, rng) : identity(ctx));
            const auto y = vertex_power(ctx, m, d, k ? random_central(ctx, rng) : identity(ctx));
            const auto t = phi_up(ctx, pi, x, y);
            auto show = [&] { return "x=" + to_string(ctx, x) + " y=" + to_string(ctx, y); };
            equiv.record(t.verdict == in_r, show);
            witnesses.record(verify_up_witness(ctx, pi, x, y, t), show);
            if (in_r) {
              exps.record(support(*t.witness_u) == std::vector<VertexId>{ctx.id_of(Vertex::gadget(NaturalPair::of(n, m), Level::L0))} &&
                              support(*t.witness_v) == std::vector<VertexId>{ctx.id_of(Vertex::gadget(NaturalPair::of(n, m), Level::L1))},
                          show);
            }
          }
        }
      }
    }
  }
  s.fact("R", join_pairs(cfg.r_edges));
  equiv.into(s, "phi_R(x_n^g c, x_m^d c') <=> {n,m} in R");
  witnesses.into(s, "recorded witnesses re-verify");
  if (exps.checked) exps.into(s, "witnesses are the hub and the level-1 vertex");
  if (p <= 3) {
    oracle_agreement(
        s, cfg, p, "phi_R",
        [](const GroupContext& c, const std::set<NaturalPair>& r) {
          return [&c, pi = pi_r(c, r)](const GroupElement& x, const GroupElement& y) { return phi_up(c, pi, x, y).verdict; };
        },
        [&cfg](const GroupContext& c, const std::set<NaturalPair>& r) {
          return [&c, &cfg, pi = pi_r(c, r)](const GroupElement& x, const GroupElement& y) {
            return full_coset_enumeration_check(c, PhiUpFormula{&pi}, x, y, cfg.oracle_budget);
          };
        });
  }
}

void extension_section(Report& rep, const RunConfig& cfg, std::uint32_t p) {
  const GroupContext ctx(build_a_fragment(cfg.naturals, cfg.effective_gadget_pairs()), Prime(p));
  const auto pi = pi_r(ctx, cfg.r_edges);
  auto& s = rep.section("extension G = H x| C2 (p=" + std::to_string(p) + ")");
  Rng rng(cfg.seed * 257u + p);
  Tally axioms, formula, conj, projection;
  const auto t = ext_t(ctx);
  const auto t_inv = ext_inv(ctx, pi, t);
  const std::size_t n = cfg.random_samples;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = random_ext_element(ctx, rng);
    const auto b = random_ext_element(ctx, rng);
    const auto c = random_ext_element(ctx, rng);
    auto show = [&] { return to_string(ctx, a) + " " + to_string(ctx, b) + " " + to_string(ctx, c); };
    const auto ab = ext_mul(ctx, pi, a, b);
    axioms.record(ext_mul(ctx, pi, ab, c) == ext_mul(ctx, pi, a, ext_mul(ctx, pi, b, c)) &&
                      ext_mul(ctx, pi, a, ext_inv(ctx, pi, a)) == ext_identity(ctx) &&
                      ext_mul(ctx, pi, a, ext_identity(ctx)) == a,
                  show);
    projection.record(ab.eps == ((a.eps + b.eps) & 1u), show);
    formula.record(is_in_h_by_formula(ctx, pi, a) == (a.eps == 0), show);
    if (i < n / 10 + 1) {
      const auto h = random_element(ctx, rng);
      conj.record(ext_mul(ctx, pi, ext_mul(ctx, pi, t, ext_from_h(h)), t_inv) == ext_from_h(pi(ctx, h)),
                  [&] { return to_string(ctx, h); });
    }
  }
  axioms.into(s, "group axioms");
  projection.into(s, "eps projection is a homomorphism onto C2");
  formula.into(s, "x^p = e holds exactly on H");
  conj.into(s, "conjugation by t = (e,1) is pi_R");
}

void subgroup_section(Report& rep, const RunConfig& cfg, const GroupContext& adequate) {
  const GroupContext ctx(build_a_fragment(cfg.naturals, cfg.effective_gadget_pairs()), Prime(cfg.p));
  const EdgeFunctional ell(cfg.r_edges);
  auto& s = rep.section("index-p subgroup H_R");
  for (const auto* c : {&ctx, &adequate}) {
    const auto r = verify_index_p(*c, ell);
    const std::string where = c == &ctx ? "base" : "adequate";
    if (r.degenerate()) {
      s.notes.push_back(where + " fragment: " + r.message);
      continue;
    }
    s.check("l_R is a homomorphism killing commutators (" + where + " fragment, all generator pairs)",
            r.homomorphism && r.kills_commutators, r.message);
  }
  const auto center = center_of_subgroup_check(ctx, ell, 2);
  auto& c = s.check("Z(H_R) = Z(H) on supports <= 2", center.holds,
                    std::to_string(center.checked) + " non-central elements, " +
                        std::to_string(center.witnessed_by_naturals) + " witnessed by some x_n, " +
                        std::to_string(center.witnessed_by_other) + " by other generators");
  for (std::size_t i = 0; i < std::min(center.unwitnessed.size(), kMaxCounterexamples); ++i) {
    c.counterexamples.push_back(to_string(ctx, from_coset(ctx, center.unwitnessed[i])));
  }
}

void down_relation_section(Report& rep, const RunConfig& cfg, const GroupContext& ctx, std::uint32_t p) {
  const EdgeFunctional ell(cfg.r_edges);
  auto& s = rep.section("going down: phi defines R in H_R (p=" + std::to_string(p) + ")");
  Rng rng(cfg.seed * 521u + p);
  Tally equiv, witnesses, hub;
  for (Natural n : cfg.naturals) {
    for (Natural m : cfg.naturals) {
      if (n == m) continue;
      const bool in_r = cfg.r_edges.count(NaturalPair::of(n, m)) > 0;
      for (std::int64_t g = 1; g < p; ++g) {
        for (std::int64_t d = 1; d < p; ++d) {
          for (std::size_t k = 0; k <= cfg.sample_budget; ++k) {
            const auto x = vertex_power(ctx, n, g, k ? random_central(ctx, rng) : identity(ctx));
            const auto y = vertex_power(ctx, m, d, k ? random_central(ctx, rng) : identity(ctx));
            const auto t = phi_down(ctx, ell, x, y);
            auto show = [&] { return "x=" + to_string(ctx, x) + " y=" + to_string(ctx, y); };
            equiv.record(t.verdict == in_r, show);
            witnesses.record(verify_down_witness(ctx, ell, x, y, t), show);
            if (in_r) {
              hub.record(t.witness_v->gen ==
                             Coset(ctx.p(), {{ctx.id_of(Vertex::gadget(NaturalPair::of(n, m), Level::L0)), 1}}),
                         show);
            }
          }
        }
      }
    }
  }
  s.fact("fragment_vertices", std::to_string(ctx.num_vertices()));
  equiv.into(s, "phi(x_n^g c, x_m^d c') <=> {n,m} in R");
  witnesses.into(s, "recorded witnesses re-verify");
  if (hub.checked) hub.into(s, "witness is the hub of the pair");
  if (p <= 3) {
    oracle_agreement(
        s, cfg, p, "phi",
        [](const GroupContext& c, const std::set<NaturalPair>& r) {
          return [&c, ell = EdgeFunctional(r)](const GroupElement& x, const GroupElement& y) {
            return phi_down(c, ell, x, y).verdict;
          };
        },
        [&cfg](const GroupContext& c, const std::set<NaturalPair>& r) {
          return [&c, &cfg, ell = EdgeFunctional(r)](const GroupElement& x, const GroupElement& y) {
            return full_coset_enumeration_check(c, PhiDownFormula{&ell}, x, y, cfg.oracle_budget);
          };
        });
  }
}

void dichotomy_section(Report& rep, const RunConfig& cfg, const GroupContext& ctx) {
  const EdgeFunctional ell(cfg.r_edges);
  auto& s = rep.section("centralizer dichotomy in H_R");
  const Adequacy adequacy = subgroup_adequacy(ctx);
  s.fact("adequacy", adequacy.message);
  s.fact("support_budget", std::to_string(cfg.support_budget));
  Tally high, low, definable;
  std::size_t min_natural = SIZE_MAX, max_other = 0;
  enumerate_cosets(ctx, cfg.support_budget, [&](const Coset& c) {
    if (ell_hat(ctx, ell, c) != 0) return;
    const std::size_t d = centralizer_dim_in_subgroup(ctx, ell, from_coset(ctx, c)).dim;
    const bool natural = c.size() == 1 && ctx.vertex(c.entries()[0].first).is_natural();
    auto show = [&] { return to_string(ctx, from_coset(ctx, c)) + " dim " + std::to_string(d); };
    if (natural) {
      min_natural = std::min(min_natural, d);
      high.record(d >= kNaturalCentralizerThreshold, show);
    } else {
      max_other = std::max(max_other, d);
      low.record(d <= kDimBound, show);
    }
  });
  Rng rng(cfg.seed * 1543u);
  for (Natural n : ctx.graph().naturals()) {
    for (std::int64_t a = 1; a < ctx.p().value(); ++a) {
      const auto x = vertex_power(ctx, n, a, random_central(ctx, rng));
      definable.record(is_natural_vertex_like_definably(ctx, ell, x, adequacy),
                       [&] { return to_string(ctx, x); });
    }
  }
  s.fact("min_dim_single_natural", std::to_string(min_natural));
  s.fact("max_dim_other", std::to_string(max_other));
  high.into(s, "dim C_{H_R}(x_n^a c)/Z(H) >= 6");
  low.into(s, "dim C_{H_R}(a)/Z(H) <= 5 for every other non-central a");
  definable.into(s, "central translates of x_n^a are recognized");
}

}  // namespace

std::set<NaturalPair> RunConfig::effective_gadget_pairs() const {
  return gadget_pairs ? *gadget_pairs : all_pairs(naturals);
}

void RunConfig::validate() const {
  for (auto q : all_primes(*this)) {
    if (q == 2 || !is_prime(q)) throw InvalidArgument("p must be an odd prime, got " + std::to_string(q));
  }
  if (naturals.empty()) throw InvalidArgument("at least one natural is required");
  if (random_samples == 0 || support_budget == 0 || recovery_support == 0 || oracle_budget == 0 || cover_cap == 0) {
    throw InvalidArgument("budgets must be positive");
  }
  const auto pairs = effective_gadget_pairs();
  for (const auto& pr : pairs) {
    if (!naturals.count(pr.lo) || !naturals.count(pr.hi)) {
      throw InvalidArgument("gadget pair " + join_pairs({pr}) + " uses a natural outside " + join_naturals(naturals));
    }
  }
  for (const auto& pr : r_edges) {
    if (!pairs.count(pr)) throw InadequateFragment("inadequate fragment: R edge " + join_pairs({pr}) + " has no gadget");
  }
}

std::vector<std::pair<std::string, std::string>> RunConfig::header() const {
  std::string primes;
  for (auto q : all_primes(*this)) primes += (primes.empty() ? "" : ",") + std::to_string(q);
  return {{"seed", std::to_string(seed)},
          {"p", primes},
          {"naturals", join_naturals(naturals)},
          {"gadget_pairs", gadget_pairs ? join_pairs(*gadget_pairs) : "all"},
          {"R", join_pairs(r_edges)},
          {"auxiliary_naturals", std::to_string(auxiliary_naturals)},
          {"budget_sample", std::to_string(sample_budget)},
          {"budget_support", std::to_string(support_budget)},
          {"budget_recovery", std::to_string(recovery_support)},
          {"budget_oracle", std::to_string(oracle_budget)},
          {"budget_cover", std::to_string(cover_cap)},
          {"random_samples", std::to_string(random_samples)}};
}

CommandResult config_error(const std::string& command, const std::string& message, const std::string& hint) {
  CommandResult r;
  r.exit_code = kExitConfig;
  r.report.command = command;
  auto& s = r.report.section("configuration error");
  s.check("configuration accepted", false, message);
  if (!hint.empty()) s.notes.push_back("hint: " + hint);
  return r;
}

CommandResult cmd_nice(const GraphDocument& doc) {
  CommandResult r;
  r.report.command = "nice";
  const Graph g = doc.build();
  const auto n = check_nice(g);
  auto& s = r.report.section("niceness");
  s.fact("vertices", std::to_string(g.size()));
  s.fact("edges", std::to_string(g.num_edges()));
  auto names = [&](const std::vector<VertexId>& vs) {
    std::string out;
    for (auto v : vs) out += (out.empty() ? "" : " ") + g.vertex(v).encode();
    return out;
  };
  s.check("at least two vertices", n.enough_vertices);
  s.check("triangle-free", n.triangle_free, n.triangle ? "triangle: " + names(*n.triangle) : "");
  s.check("square-free", n.square_free, n.square ? "4-cycle: " + names(*n.square) : "");
  auto& sep = s.check("separation", n.separation_witness_failures.empty(),
                      std::to_string(n.separation_witness_failures.size()) + " ordered pairs without a witness");
  for (const auto& [v, u] : n.separation_witness_failures) {
    if (sep.counterexamples.size() >= kMaxCounterexamples) break;
    sep.counterexamples.push_back("no vertex adjacent to " + g.vertex(v).encode() + " but not to " + g.vertex(u).encode());
  }
  s.fact("is_nice", yes_no(n.is_nice));
  r.exit_code = n.is_nice ? kExitPass : kExitFailure;
  return r;
}

CommandResult cmd_fragment(const RunConfig& cfg) {
  cfg.validate();
  CommandResult r;
  r.report.command = "fragment";
  r.report.header = cfg.header();
  const Graph g = build_a_fragment(cfg.naturals, cfg.effective_gadget_pairs());
  const GroupContext ctx(g, Prime(cfg.p));
  auto& s = r.report.section("fragment");
  s.fact("vertices", std::to_string(g.size()));
  s.fact("edges", std::to_string(g.num_edges()));
  s.fact("central_dimension", std::to_string(ctx.central_basis().size()));
  s.fact("nice", yes_no(ctx.niceness().is_nice));
  s.fact("subgroup_adequacy", subgroup_adequacy(ctx).message);
  s.fact("index_p", verify_index_p(ctx, EdgeFunctional(cfg.r_edges)).message);
  for (const auto& w : ctx.warnings()) s.notes.push_back("warning: " + w);
  GraphDocument doc = document_for(cfg.naturals, cfg.effective_gadget_pairs());
  doc.p = cfg.p;
  doc.r_edges = cfg.r_edges;
  s.notes.push_back("document: " + nlohmann::ordered_json::parse(to_json_text(doc)).dump());
  return r;
}

CommandResult cmd_verify_lemmas(const RunConfig& cfg) {
  cfg.validate();
  CommandResult r;
  r.report.command = "verify-lemmas";
  r.report.header = cfg.header();
  const auto base_pairs = cfg.effective_gadget_pairs();
  const Graph base = build_a_fragment(cfg.naturals, base_pairs);
  std::set<Natural> aux, all = cfg.naturals;
  for (std::size_t i = 0; i < cfg.auxiliary_naturals; ++i) {
    aux.insert(*cfg.naturals.rbegin() + 1 + static_cast<Natural>(i));
  }
  all.insert(aux.begin(), aux.end());
  const Graph adequate = build_a_fragment(all, adequate_pairs(all, base_pairs, aux));
  const auto primes = all_primes(cfg);

  for (auto p : primes) group_law_section(r.report, cfg, p);
  niceness_section(r.report, cfg, base, adequate);
  dimension_section(r.report, cfg);
  for (auto p : primes) going_up_section(r.report, cfg, p);
  for (auto p : primes) extension_section(r.report, cfg, p);
  const GroupContext adequate_ctx(adequate, Prime(cfg.p));
  subgroup_section(r.report, cfg, adequate_ctx);
  for (auto p : primes) {
    if (p == cfg.p) {
      down_relation_section(r.report, cfg, adequate_ctx, p);
    } else {
      down_relation_section(r.report, cfg, GroupContext(adequate, Prime(p)), p);
    }
  }
  dichotomy_section(r.report, cfg, adequate_ctx);
  r.exit_code = r.report.all_pass() ? kExitPass : kExitFailure;
  return r;
}

CommandResult cmd_roundtrip(const GraphDocument& doc, const std::string& pipeline, const RunConfig& cfg) {
  std::vector<Pipeline> pipelines;
  if (pipeline == "up" || pipeline == "both") pipelines.push_back(Pipeline::Up);
  if (pipeline == "down" || pipeline == "both") pipelines.push_back(Pipeline::Down);
  if (pipelines.empty()) throw InvalidArgument("pipeline must be up, down or both, got '" + pipeline + "'");
  RunConfig c = cfg;
  if (doc.p) c.p = *doc.p;
  c.r_edges.clear();
  c.validate();
  const NaturalGraph g = doc.natural_graph();

  CommandResult r;
  r.report.command = "roundtrip";
  r.report.header = {{"seed", std::to_string(c.seed)},
                     {"p", std::to_string(c.p)},
                     {"pipeline", pipeline},
                     {"input", to_string(g)},
                     {"auxiliary_naturals", std::to_string(c.auxiliary_naturals)},
                     {"budget_sample", std::to_string(c.sample_budget)},
                     {"budget_recovery", std::to_string(c.recovery_support)}};
  RoundtripOptions opt;
  opt.p = c.p;
  opt.auxiliary_naturals = c.auxiliary_naturals;
  opt.recovery = RecoveryOptions{c.sample_budget, c.seed, c.recovery_support};
  std::vector<NaturalGraph> recovered;
  for (Pipeline pl : pipelines) {
    const RoundtripResult res = roundtrip(g, pl, opt);
    const GroupContext ctx(build_full_fragment(fragment_naturals(g, pl, opt.auxiliary_naturals)), Prime(c.p));
    append_roundtrip_section(r.report, ctx, res);
    NaturalGraph got = res.recovered.as_natural_graph();
    std::erase_if(got.vertices, [&](Natural n) { return !g.vertices.count(n); });
    recovered.push_back(got);
  }
  if (recovered.size() == 2) {
    auto& s = r.report.section("roundtrip/agreement");
    s.check("both pipelines recover the same graph on the input naturals", recovered[0] == recovered[1],
            to_string(recovered[0]) + " vs " + to_string(recovered[1]));
  }
  r.exit_code = r.report.all_pass() ? kExitPass : kExitFailure;
  return r;
}

CommandResult cmd_ext_check(const RunConfig& cfg, const std::vector<std::string>& elements) {
  cfg.validate();
  CommandResult r;
  r.report.command = "ext-check";
  r.report.header = cfg.header();
  for (auto p : all_primes(cfg)) extension_section(r.report, cfg, p);
  if (!elements.empty()) {
    const GroupContext ctx(build_a_fragment(cfg.naturals, cfg.effective_gadget_pairs()), Prime(cfg.p));
    const auto pi = pi_r(ctx, cfg.r_edges);
    auto& s = r.report.section("given elements");
    for (const auto& text : elements) {
      const ExtElement a = parse_ext_element(ctx, text);
      const bool in_h = is_in_h_by_formula(ctx, pi, a);
      s.fact(to_string(ctx, a), in_h ? "in H" : "outside H");
      s.check("x^p = e matches the C2 coordinate for " + to_string(ctx, a), in_h == (a.eps == 0),
              "x^p = " + to_string(ctx, ext_pow(ctx, pi, a, ctx.p().value())));
    }
  }
  r.exit_code = r.report.all_pass() ? kExitPass : kExitFailure;
  return r;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t parse_size(const std::string& spec, const std::string& digits) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(digits, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (digits.empty() || pos != digits.size()) throw InvalidArgument("bad group spec '" + spec + "'");
  return v;
}

}  // namespace

NamedGroup load_group(const std::string& spec, const RunConfig& cfg) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "sl2") {
    const auto q = parse_size(spec, arg);
    return {"SL2(" + arg + ")", sl2_group(static_cast<std::uint32_t>(q))};
  }
  if (kind == "cyclic") return {"C" + arg, cyclic_group(parse_size(spec, arg))};
  if (kind == "symmetric") return {"S" + arg, symmetric_group(parse_size(spec, arg))};
  if (kind == "perms") return {arg, from_permutation_generators(parse_permutation_list(read_file(arg)))};
  if (kind == "table") return {arg, parse_cayley_table(read_file(arg))};
  if (kind == "mekler" && arg.empty()) {
    const GroupContext ctx(build_a_fragment(cfg.naturals, cfg.effective_gadget_pairs()), Prime(cfg.p));
    return {"H(fragment on " + join_naturals(cfg.naturals) + ", p=" + std::to_string(cfg.p) + ")",
            mekler_cayley_table(ctx)};
  }
  throw InvalidArgument("unknown group spec '" + spec + "' (use sl2:q, cyclic:n, symmetric:n, perms:FILE, table:FILE or mekler)");
}

CommandResult cmd_qprobe(const std::vector<std::string>& group_specs, std::int64_t n, std::size_t m,
                         const RunConfig& cfg) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (m == 0) throw InvalidArgument("m must be positive");
  if (cfg.cover_cap == 0) throw InvalidArgument("budgets must be positive");
  std::vector<NamedGroup> groups;
  for (const auto& spec : group_specs.empty() ? std::vector<std::string>{"sl2:3"} : group_specs) {
    groups.push_back(load_group(spec, cfg));
  }
  CommandResult r;
  r.report.command = "qprobe";
  r.report.header = {{"seed", std::to_string(cfg.seed)},
                     {"n", std::to_string(n)},
                     {"m", std::to_string(m)},
                     {"budget_cover", std::to_string(cfg.cover_cap)}};
  append_property_q_report(r.report, groups, n, m, cfg.cover_cap);
  r.exit_code = r.report.all_pass() ? kExitPass : kExitFailure;
  return r;
}

}  // namespace mekler
