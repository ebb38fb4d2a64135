#pragma once

// Finite-group probes around property Q: root counts, the sets A_{n,m}(G),
// power images G^n, and exact minimal numbers of left translates t*S that
// cover G. For a finite group every nonempty set is generic, so the
// covering number is reported as a quantitative stand-in.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mekler/group.hpp"
#include "mekler/report.hpp"

namespace mekler {

using Element = std::uint32_t;
using ElementSet = std::vector<Element>;  // sorted, distinct

class FiniteGroup {
 public:
  // Validates the table: Latin square, two-sided identity, inverses, and
  // associativity (every triple up to order 64, a fixed sample above).
  FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> names = {});

  std::size_t order() const noexcept { return table_.size(); }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, std::int64_t n) const;
  const std::string& name(Element a) const { return names_.at(a); }
  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }
  bool associativity_exhaustive() const noexcept { return associativity_exhaustive_; }

  ElementSet all() const;
  // Element by name; throws if absent.
  Element find(std::string_view name) const;

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<std::string> names_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  bool associativity_exhaustive_ = false;
};

// Permutation of {0, ..., k-1}.
class Permutation {
 public:
  static Permutation identity(std::size_t k);
  explicit Permutation(std::vector<std::uint32_t> image);

  std::size_t degree() const noexcept { return image_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return image_.at(i); }
  const std::vector<std::uint32_t>& image() const noexcept { return image_; }
  Permutation extended(std::size_t k) const;

  // Composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // Cycle notation on points 1..k, "()" for the identity.
  std::string cycles() const;

 private:
  std::vector<std::uint32_t> image_;
};

// Cycle notation "(1 2 3)(4 5)" or one-line notation "2 3 1 5 4", points
// numbered from 1.
Permutation parse_permutation(std::string_view text);
// One permutation per nonblank line; '#' starts a comment.
std::vector<Permutation> parse_permutation_list(std::string_view text);

inline constexpr std::size_t kDefaultMaxOrder = 10000;

// Closure of the generators; elements named in cycle notation, identity first.
FiniteGroup from_permutation_generators(std::vector<Permutation> gens, std::size_t max_order = kDefaultMaxOrder);

// "order" on the first line, then order rows of order indices.
FiniteGroup parse_cayley_table(std::string_view text);
std::string to_cayley_text(const FiniteGroup& g);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);
// SL_2(F_q), q an odd prime, acting on the nonzero vectors of F_q^2 and
// generated by [[1,1],[0,1]] and [[1,0],[1,1]]; elements named by matrix.
FiniteGroup sl2_group(std::uint32_t q);
// Every element of the Mekler group of ctx, by normal form.
FiniteGroup mekler_cayley_table(const GroupContext& ctx, std::size_t max_order = kDefaultMaxOrder);

// The subgroup on a closed subset, with its embedding.
struct Subgroup {
  FiniteGroup group;
  ElementSet embedding;  // embedding[i] is the element of the ambient group
};
Subgroup subgroup_of(const FiniteGroup& g, const ElementSet& elements);
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& h);
ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& gens);

std::vector<Element> power_map(const FiniteGroup& g, std::int64_t n);
// #{y : y^n = x^n}.
std::size_t nth_roots_count(const FiniteGroup& g, Element x, std::int64_t n);
ElementSet a_nm_set(const FiniteGroup& g, std::int64_t n, std::size_t m);
ElementSet power_image(const FiniteGroup& g, std::int64_t n);

struct CoverCertificate {
  std::vector<Element> translates;
  bool covered = false;
};

struct CoverResult {
  std::size_t number = 0;
  CoverCertificate certificate;
  std::size_t greedy_bound = 0;
  // False when the group exceeds the cap or the search hit its node limit,
  // in which case number is the greedy upper bound.
  bool exact = false;
  std::uint64_t nodes = 0;
};

inline constexpr std::size_t kDefaultCoverCap = 2000;
inline constexpr std::uint64_t kDefaultCoverNodeLimit = 20'000'000;

// Minimal k with t_1 S u ... u t_k S = G. Throws on empty s.
CoverResult covering_number(const FiniteGroup& g, const ElementSet& s, std::size_t cap = kDefaultCoverCap,
                            std::uint64_t node_limit = kDefaultCoverNodeLimit);
// Recomputes the union of the certificate's translates.
bool verify_cover(const FiniteGroup& g, const ElementSet& s, const CoverCertificate& cert);

bool unique_root_extraction_check(const FiniteGroup& g, std::int64_t n_max);
bool unique_root_extraction_check(const FiniteGroup& g, const std::vector<std::int64_t>& ns);

// For H normal in G with p > [G:H] prime and H inside A_{p,m}(H): roots of
// p-th powers of H stay in H, A_{p,m}(H) lies in A_{p,m}(G), and coset
// representatives times A_{p,m}(G) cover G.
struct CosetCoverCheck {
  bool hypotheses = false;  // H normal, p prime, p > [G:H], H = A_{p,m}(H)
  bool roots_stay_in_h = false;
  bool inclusion = false;
  bool covered = false;
  std::vector<Element> representatives;
  std::string message;
};
CosetCoverCheck coset_cover_check(const FiniteGroup& g, const ElementSet& h, std::uint32_t p, std::size_t m);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// One section per group: |A_{n,m}|, |G^n|, their covering numbers, and the
// unique-root verdict up to n.
void append_property_q_report(Report& report, const std::vector<NamedGroup>& groups, std::int64_t n, std::size_t m,
                              std::size_t cover_cap = kDefaultCoverCap);

}  // namespace mekler
