#include "mekler/definable.hpp"

#include <array>

namespace mekler {

std::string_view method_name(QuantifierMethod m) {
  switch (m) {
    case QuantifierMethod::VertexLikeEnumeration: return "vertex-like-enumeration";
    case QuantifierMethod::KernelIntersection: return "kernel-intersection";
    case QuantifierMethod::FullCosetEnumeration: return "full-coset-enumeration";
  }
  return "?";
}

bool psi(const GroupContext& ctx, const GroupElement& x, const GroupElement& y) {
  // x^a = y z for some central z iff a*x.gen == y.gen.
  for (std::uint32_t a = 1; a < ctx.p().value(); ++a) {
    if (x.gen.scaled(a) == y.gen) return false;
  }
  return true;
}

FormulaTrace phi_up(const GroupContext& ctx, const InducedAutomorphism& pi, const GroupElement& x,
                    const GroupElement& y) {
  FormulaTrace t;
  t.method = QuantifierMethod::VertexLikeEnumeration;
  t.psi = psi(ctx, x, y);
  if (!t.psi) return t;

  const std::uint32_t p = ctx.p().value();
  const auto n = static_cast<std::uint32_t>(ctx.num_vertices());
  auto vl = [&](std::uint32_t v, std::uint32_t a) { return Coset::from_sorted(ctx.p(), {{VertexId{v}, a}}); };

  // v-candidates do not depend on u: collect those pi moves mod Z(H).
  std::vector<Coset> moved;
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t b = 1; b < p; ++b) {
      Coset v = vl(s, b);
      if (pi.on_coset(v) != v) moved.push_back(std::move(v));
    }
  }
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t a = 1; a < p; ++a) {
      const Coset u = vl(s, a);
      if (!commute_mod_center(ctx, u, x.gen) || !commute_mod_center(ctx, u, y.gen)) {
        t.candidates_examined += moved.size();
        continue;
      }
      for (const Coset& v : moved) {
        ++t.candidates_examined;
        if (commute_mod_center(ctx, u, v)) {
          t.verdict = true;
          t.witness_u = from_coset(ctx, u);
          t.witness_v = from_coset(ctx, v);
          return t;
        }
      }
    }
  }
  return t;
}

FormulaTrace phi_down(const GroupContext& ctx, const EdgeFunctional& ell, const GroupElement& x,
                      const GroupElement& y) {
  if (!in_h_gamma(ctx, ell, x) || !in_h_gamma(ctx, ell, y)) {
    throw InvalidArgument("phi_down: arguments must lie in H_R");
  }
  FormulaTrace t;
  t.method = QuantifierMethod::KernelIntersection;
  t.psi = psi(ctx, x, y);
  if (!t.psi) return t;

  auto mx = bracket_matrix(ctx, x.gen);
  const auto my = bracket_matrix(ctx, y.gen);
  FpMatrix<CentralPair, VertexId> ml(ctx.p(), mx.columns());
  const Coset row = ell.as_row(ctx);
  if (!row.empty()) ml.add_row(CentralPair{}, row);
  const std::array<FpMatrix<CentralPair, VertexId>, 3> parts{std::move(mx), my, std::move(ml)};
  const auto basis = kernel_basis(stack(std::span<const FpMatrix<CentralPair, VertexId>>(parts)));
  t.candidates_examined = basis.size();
  if (!basis.empty()) {
    t.verdict = true;
    t.witness_v = from_coset(ctx, basis.front());
  }
  return t;
}

bool verify_up_witness(const GroupContext& ctx, const InducedAutomorphism& pi, const GroupElement& x,
                       const GroupElement& y, const FormulaTrace& trace) {
  if (!trace.verdict) return true;
  if (!trace.witness_u || !trace.witness_v) return false;
  const auto& u = *trace.witness_u;
  const auto& v = *trace.witness_v;
  return psi(ctx, x, y) && is_vertex_like(u) && is_vertex_like(v) && pi(ctx, v).gen != v.gen &&
         commutator(ctx, u, x) == identity(ctx) &&
         commutator(ctx, u, y) == identity(ctx) && commutator(ctx, u, v) == identity(ctx);
}

bool verify_down_witness(const GroupContext& ctx, const EdgeFunctional& ell, const GroupElement& x,
                         const GroupElement& y, const FormulaTrace& trace) {
  if (!trace.verdict) return true;
  if (!trace.witness_v) return false;
  const auto& v = *trace.witness_v;
  return psi(ctx, x, y) && in_h_gamma(ctx, ell, v) && !is_central(v) &&
         commutator(ctx, v, x) == identity(ctx) && commutator(ctx, v, y) == identity(ctx);
}

namespace {

std::uint64_t check_budget(const GroupContext& ctx, std::uint64_t budget) {
  const std::uint32_t p = ctx.p().value();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ctx.num_vertices(); ++i) {
    if (total > budget / p) throw BudgetExceeded("full coset enumeration: p^|V| exceeds the oracle budget");
    total *= p;
  }
  return total;
}

// Visits every coset of F_p^V; stops early when fn returns true.
template <class Fn>
bool any_coset(const GroupContext& ctx, std::uint64_t budget, Fn&& fn) {
  const std::uint32_t p = ctx.p().value();
  const std::size_t n = ctx.num_vertices();
  const std::uint64_t total = check_budget(ctx, budget);
  std::vector<std::uint32_t> digits(n, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<Coset::Entry> entries;
    for (std::size_t i = 0; i < n; ++i) {
      if (digits[i]) entries.emplace_back(VertexId{static_cast<std::uint32_t>(i)}, digits[i]);
    }
    if (fn(Coset::from_sorted(ctx.p(), std::move(entries)))) return true;
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return false;
}

bool commutes(const GroupContext& ctx, const GroupElement& a, const GroupElement& b) {
  return commutator(ctx, a, b) == identity(ctx);
}

bool oracle_psi(const GroupContext& ctx, const GroupElement& x, const GroupElement& y) {
  // z = y^-1 x^a is forced; the existential holds iff that z is central.
  const GroupElement y_inv = inv(ctx, y);
  for (std::uint32_t a = 1; a < ctx.p().value(); ++a) {
    if (is_central(mul(ctx, y_inv, pow(ctx, x, a)))) return false;
  }
  return true;
}

}  // namespace

bool full_coset_enumeration_check(const GroupContext& ctx, const Formula& formula, const GroupElement& x,
                                  const GroupElement& y, std::uint64_t budget) {
  const bool base = oracle_psi(ctx, x, y);
  if (std::holds_alternative<PsiFormula>(formula)) return base;
  if (!base) {
    check_budget(ctx, budget);
    return false;
  }

  if (const auto* up = std::get_if<PhiUpFormula>(&formula)) {
    std::vector<GroupElement> us, vs;
    any_coset(ctx, budget, [&](const Coset& c) {
      const GroupElement g = from_coset(ctx, c);
      if (!is_vertex_like(g)) return false;
      if (commutes(ctx, g, x) && commutes(ctx, g, y)) us.push_back(g);
      if (!is_central(mul(ctx, inv(ctx, g), (*up->pi)(ctx, g)))) vs.push_back(g);
      return false;
    });
    for (const auto& u : us) {
      for (const auto& v : vs) {
        if (commutes(ctx, u, v)) return true;
      }
    }
    return false;
  }

  const auto& down = std::get<PhiDownFormula>(formula);
  return any_coset(ctx, budget, [&](const Coset& c) {
    if (c.empty()) return false;
    const GroupElement v = from_coset(ctx, c);
    return in_h_gamma(ctx, *down.ell, v) && commutes(ctx, v, x) && commutes(ctx, v, y);
  });
}

}  // namespace mekler
