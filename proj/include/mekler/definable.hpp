#pragma once

// Exact evaluators for the formulas used by the interpretations:
//
//   psi(x, y)     no z in Z(H) and 0 < a < p with x^a = y z
//   phi_up(x, y)  psi(x, y) and there are vertex-like u, v with
//                 pi(v)Z != vZ and [u,x] = [u,y] = [u,v] = e
//   phi_down(x,y) psi(x, y) and there is v in H_R \ Z(H) with [v,x] = [v,y] = e
//
// Every atomic condition depends only on cosets mod Z(H), so the
// quantifiers range over H/Z(H): vertex-like cosets for phi_up, a kernel
// intersection for phi_down.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "mekler/group.hpp"
#include "mekler/subgroup.hpp"

namespace mekler {

enum class QuantifierMethod { VertexLikeEnumeration, KernelIntersection, FullCosetEnumeration };

std::string_view method_name(QuantifierMethod m);

struct FormulaTrace {
  bool verdict = false;
  bool psi = false;
  std::optional<GroupElement> witness_u;
  std::optional<GroupElement> witness_v;
  QuantifierMethod method = QuantifierMethod::VertexLikeEnumeration;
  std::size_t candidates_examined = 0;
};

bool psi(const GroupContext& ctx, const GroupElement& x, const GroupElement& y);

FormulaTrace phi_up(const GroupContext& ctx, const InducedAutomorphism& pi, const GroupElement& x,
                    const GroupElement& y);

// Throws InvalidArgument if x or y is outside H_R.
FormulaTrace phi_down(const GroupContext& ctx, const EdgeFunctional& ell, const GroupElement& x,
                      const GroupElement& y);

// Re-checks a recorded phi_up / phi_down witness against the atomic conditions.
bool verify_up_witness(const GroupContext& ctx, const InducedAutomorphism& pi, const GroupElement& x,
                       const GroupElement& y, const FormulaTrace& trace);
bool verify_down_witness(const GroupContext& ctx, const EdgeFunctional& ell, const GroupElement& x,
                         const GroupElement& y, const FormulaTrace& trace);

struct PsiFormula {};
struct PhiUpFormula {
  const InducedAutomorphism* pi;
};
struct PhiDownFormula {
  const EdgeFunctional* ell;
};
using Formula = std::variant<PsiFormula, PhiUpFormula, PhiDownFormula>;

inline constexpr std::uint64_t kDefaultOracleBudget = 531441;  // 3^12

// Independent oracle: quantifiers range over every coset of H/Z(H), and
// commutation is decided with group multiplication (g^-1 h^-1 g h) instead
// of the bilinear form. Throws BudgetExceeded when p^|V| > budget.
bool full_coset_enumeration_check(const GroupContext& ctx, const Formula& formula, const GroupElement& x,
                                  const GroupElement& y, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace mekler
