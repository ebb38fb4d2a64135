#pragma once

// G = H x| C_2 with (h, e) * (k, d) = (h pi^e(k), e + d), pi an involutive
// automorphism of H (pi_R in practice).

#include <cstdint>
#include <string>
#include <string_view>

#include "mekler/group.hpp"

namespace mekler {

struct ExtElement {
  GroupElement h;
  std::uint8_t eps = 0;  // 0 or 1

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

ExtElement ext_identity(const GroupContext& ctx);
ExtElement ext_from_h(GroupElement h);
// t = (e, 1); conjugation by t acts on H as pi.
ExtElement ext_t(const GroupContext& ctx);

ExtElement ext_mul(const GroupContext& ctx, const InducedAutomorphism& pi, const ExtElement& a,
                   const ExtElement& b);
ExtElement ext_inv(const GroupContext& ctx, const InducedAutomorphism& pi, const ExtElement& a);
ExtElement ext_pow(const GroupContext& ctx, const InducedAutomorphism& pi, const ExtElement& a,
                   std::int64_t k);

// The formula x^p = e, which defines H inside G for odd p.
bool is_in_h_by_formula(const GroupContext& ctx, const InducedAutomorphism& pi, const ExtElement& a);

ExtElement random_ext_element(const GroupContext& ctx, Rng& rng);

// "(<element>, <0|1>)".
std::string to_string(const GroupContext& ctx, const ExtElement& a);
ExtElement parse_ext_element(const GroupContext& ctx, std::string_view text);

}  // namespace mekler
