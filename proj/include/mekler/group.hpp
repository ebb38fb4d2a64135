#pragma once

// Arithmetic in the Mekler group H(G): the free nilpotent class-2,
// exponent-p group on generators x_v, v in G, in which x_u and x_v commute
// exactly when {u, v} is an edge.
//
// Elements are stored in normal form x_{v1}^{a1} ... x_{vk}^{ak} z, with
// v1 < ... < vk in vertex order and z central. The center has basis
// c_{uv} = [x_u, x_v] for non-adjacent u < v. Commutators follow
// [g, h] = g^-1 h^-1 g h, which gives the collection cocycle
//
//   x_v^a x_u^b = x_u^b x_v^a c_{uv}^(-ab)   (u < v),
//
// so beta(a, b)_{uv} = -a_v b_u and the commutator form is
// lambda(a, b)_{uv} = a_u b_v - a_v b_u.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mekler/fp_linear.hpp"
#include "mekler/graph.hpp"
#include "mekler/random.hpp"

namespace mekler {

// Basis element c_{lo,hi} of the center, lo < hi, non-adjacent.
struct CentralPair {
  VertexId lo;
  VertexId hi;
  friend auto operator<=>(const CentralPair&, const CentralPair&) = default;
};

// An element of H/Z(H), the F_p-space with basis {x_v Z(H)}.
using Coset = FpVector<VertexId>;
using CentralVector = FpVector<CentralPair>;

struct GroupElement {
  Coset gen;
  CentralVector cen;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class GroupContext {
 public:
  GroupContext(Graph graph, Prime p);

  const Graph& graph() const noexcept { return graph_; }
  Prime p() const noexcept { return p_; }
  std::size_t num_vertices() const noexcept { return graph_.size(); }
  const Vertex& vertex(VertexId v) const { return graph_.vertex(v); }
  VertexId id_of(const Vertex& v) const { return graph_.id_of(v); }
  bool adjacent(VertexId a, VertexId b) const { return graph_.adjacent(a, b); }

  const std::vector<CentralPair>& central_basis() const noexcept { return central_basis_; }
  std::optional<CentralPair> central_pair(VertexId a, VertexId b) const;

  const NicenessReport& niceness() const noexcept { return niceness_; }
  // Human-readable warnings, e.g. when the graph is not nice.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  // True when the element's coordinates are well formed for this context.
  bool contains(const GroupElement& a) const;

 private:
  Graph graph_;
  Prime p_;
  NicenessReport niceness_;
  std::vector<CentralPair> central_basis_;
  std::vector<std::string> warnings_;
};

GroupElement identity(const GroupContext& ctx);
GroupElement generator(const GroupContext& ctx, VertexId v);
GroupElement generator(const GroupContext& ctx, const Vertex& v);
GroupElement from_coset(const GroupContext& ctx, Coset c);
GroupElement central_element(const GroupContext& ctx, CentralVector z);

// beta(a, b): central correction for multiplying normal forms.
CentralVector cocycle(const GroupContext& ctx, const Coset& a, const Coset& b);
// lambda(a, b): the commutator as an alternating bilinear form on H/Z(H).
CentralVector bracket(const GroupContext& ctx, const Coset& a, const Coset& b);
bool commute_mod_center(const GroupContext& ctx, const Coset& a, const Coset& b);

GroupElement mul(const GroupContext& ctx, const GroupElement& a, const GroupElement& b);
GroupElement inv(const GroupContext& ctx, const GroupElement& a);
GroupElement pow(const GroupContext& ctx, const GroupElement& a, std::int64_t k);
// g^-1 h^-1 g h, computed with group multiplication.
GroupElement commutator(const GroupContext& ctx, const GroupElement& g, const GroupElement& h);

std::vector<VertexId> support(const GroupElement& a);
std::size_t length(const GroupElement& a);
bool is_central(const GroupElement& a);
bool is_vertex_like(const GroupElement& a);
bool vertex_like_infinite_degree(const GroupContext& ctx, const GroupElement& a);

struct CentralizerDim {
  std::size_t dim;
  bool central_input;  // a was central; dim is then |V|
};

// The linear map b -> lambda(a, b) on F_p^V, one row per central pair.
FpMatrix<CentralPair, VertexId> bracket_matrix(const GroupContext& ctx, const Coset& a);

// The same kernel, with the columns that a singleton row pins to zero
// already removed: columns are supp(a) plus the vertices outside supp(a)
// adjacent to all of it, rows are the non-adjacent pairs inside supp(a).
FpMatrix<std::size_t, VertexId> centralizer_system(const GroupContext& ctx, const Coset& a);

// dim C_H(a)/Z(H).
CentralizerDim centralizer_dim_mod_center(const GroupContext& ctx, const GroupElement& a);

// Automorphism of H induced by a graph automorphism.
class InducedAutomorphism {
 public:
  InducedAutomorphism(const GroupContext& ctx, VertexPermutation sigma);
  static InducedAutomorphism identity(const GroupContext& ctx);

  GroupElement operator()(const GroupContext& ctx, const GroupElement& a) const;
  Coset on_coset(const Coset& c) const;
  const VertexPermutation& permutation() const noexcept { return sigma_; }
  InducedAutomorphism inverse(const GroupContext& ctx) const;

 private:
  VertexPermutation sigma_;
};

GroupElement induced_automorphism(const GroupContext& ctx, const VertexPermutation& sigma,
                                  const GroupElement& a);

// pi_R: induced by the pair-swap automorphism for R.
InducedAutomorphism pi_r(const GroupContext& ctx, const std::set<NaturalPair>& r_edges);

// Random element with independent uniform coordinates.
GroupElement random_element(const GroupContext& ctx, Rng& rng);
GroupElement random_central(const GroupContext& ctx, Rng& rng);
Coset random_coset(const GroupContext& ctx, Rng& rng);

// Calls fn on every coset with support size in [1, max_support] and all
// exponents nonzero, supports in lexicographic vertex order.
void enumerate_cosets(const GroupContext& ctx, std::size_t max_support,
                      const std::function<void(const Coset&)>& fn);

// Text form: x[v1]^a1 * ... * x[vk]^ak * z{(u,v):c, ...}, identity "e".
std::string to_string(const GroupContext& ctx, const GroupElement& a);
GroupElement parse_element(const GroupContext& ctx, std::string_view text);

}  // namespace mekler
