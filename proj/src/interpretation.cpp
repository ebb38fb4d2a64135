#include "mekler/interpretation.hpp"

#include <sstream>

namespace mekler {

std::string_view pipeline_name(Pipeline p) { return p == Pipeline::Up ? "up" : "down"; }

bool approx_equiv(const GroupContext& ctx, const GroupElement& g, const GroupElement& h) {
  if (h.gen.empty()) return g.gen.empty();
  for (std::uint32_t a = 1; a < ctx.p().value(); ++a) {
    if (g.gen == h.gen.scaled(a)) return true;
  }
  return false;
}

NaturalGraph RecoveredGraph::as_natural_graph() const {
  NaturalGraph g;
  for (const auto& c : classes) g.vertices.insert(c.label);
  g.edges = edges;
  return g;
}

namespace {

Natural support_natural(const GroupContext& ctx, const GroupElement& a) {
  return ctx.vertex(a.gen.entries().front().first).natural_value();
}

std::vector<RecoveredClass> partition(const GroupContext& ctx, const std::vector<GroupElement>& y) {
  std::vector<RecoveredClass> classes;
  for (const auto& g : y) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const RecoveredClass& c) { return approx_equiv(ctx, g, c.members.front()); });
    if (it == classes.end()) {
      classes.push_back(RecoveredClass{support_natural(ctx, g), {g}});
    } else {
      it->members.push_back(g);
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const RecoveredClass& a, const RecoveredClass& b) { return a.label < b.label; });
  return classes;
}

template <class Eval>
void read_edges(RecoveredGraph& out, Eval&& eval) {
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.classes.size(); ++j) {
      const auto& ci = out.classes[i];
      const auto& cj = out.classes[j];
      EdgeEvidence ev;
      ev.a = ci.label;
      ev.b = cj.label;
      ev.trace = eval(ci.members.front(), cj.members.front());
      ev.edge = ev.trace.verdict;
      for (const auto& x : ci.members) {
        for (const auto& y : cj.members) {
          ++ev.member_pairs;
          if (eval(x, y).verdict != ev.edge) ev.consistent = false;
        }
      }
      if (ev.edge) out.edges.insert(NaturalPair::of(ev.a, ev.b));
      out.consistent = out.consistent && ev.consistent;
      out.evidence.push_back(std::move(ev));
    }
  }
  // The relation read off must be irreflexive: members of one class are never related.
  for (const auto& c : out.classes) {
    if (c.members.size() > 1 && eval(c.members[0], c.members[1]).verdict) out.consistent = false;
  }
}

void require_gadgets(const GroupContext& ctx, const std::set<NaturalPair>& pairs, const char* what) {
  for (const auto& pr : pairs) {
    if (!ctx.graph().has_gadget(pr)) {
      throw InadequateFragment(std::string("inadequate fragment: ") + what + " {" + std::to_string(pr.lo) + "," +
                               std::to_string(pr.hi) + "} has no gadget");
    }
  }
}

}  // namespace

RecoveredGraph recover_graph_up(const GroupContext& ctx, const std::set<NaturalPair>& r_edges,
                                const RecoveryOptions& options) {
  // The witnesses for pairs in R and the refuters for the rest both live on the pair's gadget.
  require_gadgets(ctx, all_pairs(ctx.graph().naturals()), "pair");
  require_gadgets(ctx, r_edges, "edge");
  const auto pi = pi_r(ctx, r_edges);
  Rng rng(options.seed);
  RecoveredGraph out;
  out.pipeline = Pipeline::Up;

  std::vector<GroupElement> y;
  const std::uint32_t p = ctx.p().value();
  for (std::uint32_t v = 0; v < ctx.num_vertices(); ++v) {
    for (std::uint32_t a = 1; a < p; ++a) {
      const GroupElement base = pow(ctx, generator(ctx, VertexId{v}), a);
      for (std::size_t s = 0; s <= options.sample_budget; ++s) {
        const GroupElement g = s == 0 ? base : mul(ctx, base, random_central(ctx, rng));
        ++out.candidates_examined;
        if (vertex_like_infinite_degree(ctx, g)) y.push_back(g);
      }
    }
  }
  out.y_size = y.size();
  out.classes = partition(ctx, y);
  read_edges(out, [&](const GroupElement& a, const GroupElement& b) { return phi_up(ctx, pi, a, b); });
  return out;
}

RecoveredGraph recover_graph_down(const GroupContext& ctx, const std::set<NaturalPair>& r_edges,
                                  const RecoveryOptions& options) {
  const Adequacy adequacy = subgroup_adequacy(ctx);
  if (!adequacy.adequate) throw InadequateFragment(adequacy.message);
  require_gadgets(ctx, r_edges, "edge");
  const EdgeFunctional ell(r_edges);
  Rng rng(options.seed);
  RecoveredGraph out;
  out.pipeline = Pipeline::Down;

  std::vector<GroupElement> y;
  enumerate_cosets(ctx, options.support_budget, [&](const Coset& c) {
    if (ell_hat(ctx, ell, c) != 0) return;
    const GroupElement g = from_coset(ctx, c);
    ++out.candidates_examined;
    const bool definable = is_natural_vertex_like_definably(ctx, ell, g, adequacy);
    if (definable != vertex_like_infinite_degree(ctx, g)) ++out.syntactic_disagreements;
    if (!definable) return;
    y.push_back(g);
    for (std::size_t s = 0; s < options.sample_budget; ++s) {
      const GroupElement t = mul(ctx, g, random_central(ctx, rng));
      ++out.candidates_examined;
      if (!is_natural_vertex_like_definably(ctx, ell, t, adequacy)) {
        ++out.syntactic_disagreements;
        continue;
      }
      y.push_back(t);
    }
  });
  out.y_size = y.size();
  out.classes = partition(ctx, y);
  out.consistent = out.syntactic_disagreements == 0;
  read_edges(out, [&](const GroupElement& a, const GroupElement& b) { return phi_down(ctx, ell, a, b); });
  return out;
}

std::set<Natural> fragment_naturals(const NaturalGraph& g, Pipeline pipeline, std::size_t auxiliary,
                                    std::set<Natural>* added) {
  std::set<Natural> naturals = g.vertices;
  if (pipeline == Pipeline::Down) {
    Natural next = naturals.empty() ? 0 : *naturals.rbegin() + 1;
    for (std::size_t i = 0; i < auxiliary; ++i, ++next) {
      naturals.insert(next);
      if (added) added->insert(next);
    }
  }
  return naturals;
}

RoundtripResult roundtrip(const NaturalGraph& g, Pipeline pipeline, const RoundtripOptions& options) {
  for (const auto& e : g.edges) {
    if (!g.vertices.count(e.lo) || !g.vertices.count(e.hi)) {
      throw InvalidArgument("roundtrip: edge endpoint outside the vertex set");
    }
  }
  RoundtripResult r;
  r.pipeline = pipeline;
  r.input = g;
  const auto naturals = fragment_naturals(g, pipeline, options.auxiliary_naturals, &r.auxiliary);
  const GroupContext ctx(build_full_fragment(naturals), Prime(options.p));
  r.fragment_vertices = ctx.num_vertices();
  r.fragment_edges = ctx.graph().num_edges();
  r.fragment_nice = ctx.niceness().is_nice;
  r.recovered = pipeline == Pipeline::Up ? recover_graph_up(ctx, g.edges, options.recovery)
                                         : recover_graph_down(ctx, g.edges, options.recovery);
  const NaturalGraph got = r.recovered.as_natural_graph();
  r.identical = got.vertices == naturals && got.edges == g.edges && r.recovered.consistent;
  return r;
}

namespace {

std::string join(const std::set<Natural>& ns) {
  std::string out;
  for (Natural n : ns) out += (out.empty() ? "" : ",") + std::to_string(n);
  return out;
}

}  // namespace

std::string to_string(const NaturalGraph& g) {
  std::ostringstream out;
  out << "V={" << join(g.vertices) << "} E={";
  bool first = true;
  for (const auto& e : g.edges) {
    out << (first ? "" : ",") << e.lo << "-" << e.hi;
    first = false;
  }
  out << "}";
  return out.str();
}

void append_roundtrip_section(Report& report, const GroupContext& ctx, const RoundtripResult& result) {
  auto& s = report.section(std::string("roundtrip/") + std::string(pipeline_name(result.pipeline)));
  s.fact("input", to_string(result.input));
  s.fact("fragment_vertices", std::to_string(result.fragment_vertices));
  s.fact("fragment_edges", std::to_string(result.fragment_edges));
  s.fact("fragment_nice", result.fragment_nice ? "true" : "false");
  if (!result.auxiliary.empty()) {
    s.fact("auxiliary_naturals", "{" + join(result.auxiliary) + "}");
  }
  if (result.pipeline == Pipeline::Down) s.fact("adequacy", subgroup_adequacy(ctx).message);
  s.fact("candidates_examined", std::to_string(result.recovered.candidates_examined));
  s.fact("y_size", std::to_string(result.recovered.y_size));
  s.fact("classes", std::to_string(result.recovered.classes.size()));
  s.fact("recovered", to_string(result.recovered.as_natural_graph()));
  for (const auto& ev : result.recovered.evidence) {
    if (!ev.edge && result.input.vertices.count(ev.a) + result.input.vertices.count(ev.b) < 2) continue;
    std::ostringstream d;
    d << method_name(ev.trace.method) << ", psi=" << (ev.trace.psi ? "true" : "false")
      << ", candidates=" << ev.trace.candidates_examined << ", member_pairs=" << ev.member_pairs;
    if (ev.trace.witness_u) d << ", u=" << to_string(ctx, *ev.trace.witness_u);
    if (ev.trace.witness_v) d << ", v=" << to_string(ctx, *ev.trace.witness_v);
    const bool expected = result.input.edges.count(NaturalPair::of(ev.a, ev.b)) > 0;
    s.check("edge " + std::to_string(ev.a) + "-" + std::to_string(ev.b) + " " + (ev.edge ? "present" : "absent"),
            ev.edge == expected && ev.consistent, d.str());
  }
  s.check("recovered graph identical", result.identical,
          result.recovered.syntactic_disagreements
              ? std::to_string(result.recovered.syntactic_disagreements) + " definable/syntactic disagreements"
              : "");
}

}  // namespace mekler
