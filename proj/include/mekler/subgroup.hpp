#pragma once

// The index-p subgroup H_R = preimage of ker(l_R) under H -> H/Z(H), where
// l_R(x_v Z) is 0 on naturals, 0 on the hub (pair,0) of every pair in R,
// and 1 on every other vertex.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mekler/group.hpp"

namespace mekler {

class EdgeFunctional {
 public:
  explicit EdgeFunctional(std::set<NaturalPair> r_edges) : r_edges_(std::move(r_edges)) {}

  const std::set<NaturalPair>& r_edges() const noexcept { return r_edges_; }
  std::uint32_t value(const Vertex& v) const;
  // The functional as a coset-space row over the context's vertices.
  Coset as_row(const GroupContext& ctx) const;

 private:
  std::set<NaturalPair> r_edges_;
};

FpScalar ell_hat(const GroupContext& ctx, const EdgeFunctional& ell, const GroupElement& a);
std::uint32_t ell_hat(const GroupContext& ctx, const EdgeFunctional& ell, const Coset& a);
bool in_h_gamma(const GroupContext& ctx, const EdgeFunctional& ell, const GroupElement& a);

struct IndexReport {
  bool surjective = false;          // some generator takes a nonzero value
  bool homomorphism = false;        // l(ab) = l(a) + l(b) over generator pairs
  bool kills_commutators = false;   // l([x_u, x_v]) = 0 over generator pairs
  std::size_t value_one_vertices = 0;
  bool degenerate() const noexcept { return !surjective; }
  bool index_p() const noexcept { return surjective && homomorphism && kills_commutators; }
  std::string message;
};

IndexReport verify_index_p(const GroupContext& ctx, const EdgeFunctional& ell);

struct CenterCheckReport {
  bool holds = true;
  std::size_t checked = 0;
  std::size_t witnessed_by_naturals = 0;
  std::size_t witnessed_by_other = 0;
  std::vector<Coset> unwitnessed;
};

// For every non-central coset in H_R of support <= support_budget, looks
// for an element of H_R that does not commute with it: the x_n first, then
// a basis of ker(l_R). Holding everywhere is Z(H_R) = Z(H) on that range.
CenterCheckReport center_of_subgroup_check(const GroupContext& ctx, const EdgeFunctional& ell,
                                           std::size_t support_budget = 3);

// dim C_{H_R}(a)/Z(H).
CentralizerDim centralizer_dim_in_subgroup(const GroupContext& ctx, const EdgeFunctional& ell,
                                           const GroupElement& a);

inline constexpr std::size_t kRequiredPartners = 7;
inline constexpr std::size_t kNaturalCentralizerThreshold = 6;

struct Adequacy {
  bool adequate = false;
  // Naturals with fewer than kRequiredPartners gadgeted partners.
  std::vector<Natural> short_naturals;
  std::string message;
};

Adequacy subgroup_adequacy(const GroupContext& ctx, std::size_t required = kRequiredPartners);

// Centralizer-dimension test dim C_{H_R}(a)/Z >= 6. Throws
// InadequateFragment when some natural lacks the partners that bound needs.
bool is_natural_vertex_like_definably(const GroupContext& ctx, const EdgeFunctional& ell,
                                      const GroupElement& a);
// Same, with the adequacy verdict computed once by the caller.
bool is_natural_vertex_like_definably(const GroupContext& ctx, const EdgeFunctional& ell,
                                      const GroupElement& a, const Adequacy& adequacy);

}  // namespace mekler
