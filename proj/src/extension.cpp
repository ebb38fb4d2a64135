#include "mekler/extension.hpp"

namespace mekler {

namespace {

void require_involution(const InducedAutomorphism& pi) {
  if (pi.permutation().order() > 2) throw InvalidArgument("extension automorphism must be an involution");
}

}  // namespace

ExtElement ext_identity(const GroupContext& ctx) { return {identity(ctx), 0}; }
ExtElement ext_from_h(GroupElement h) { return {std::move(h), 0}; }
ExtElement ext_t(const GroupContext& ctx) { return {identity(ctx), 1}; }

ExtElement ext_mul(const GroupContext& ctx, const InducedAutomorphism& pi, const ExtElement& a,
                   const ExtElement& b) {
  const GroupElement k = a.eps ? pi(ctx, b.h) : b.h;
  return {mul(ctx, a.h, k), static_cast<std::uint8_t>((a.eps + b.eps) & 1u)};
}

ExtElement ext_inv(const GroupContext& ctx, const InducedAutomorphism& pi, const ExtElement& a) {
  // (h, e)^-1 = (pi^-e(h^-1), e), and pi^-1 = pi.
  require_involution(pi);
  const GroupElement h_inv = inv(ctx, a.h);
  return {a.eps ? pi(ctx, h_inv) : h_inv, a.eps};
}

ExtElement ext_pow(const GroupContext& ctx, const InducedAutomorphism& pi, const ExtElement& a,
                   std::int64_t k) {
  ExtElement base = k < 0 ? ext_inv(ctx, pi, a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  ExtElement out = ext_identity(ctx);
  while (e > 0) {
    if (e & 1u) out = ext_mul(ctx, pi, out, base);
    base = ext_mul(ctx, pi, base, base);
    e >>= 1;
  }
  return out;
}

bool is_in_h_by_formula(const GroupContext& ctx, const InducedAutomorphism& pi, const ExtElement& a) {
  return ext_pow(ctx, pi, a, ctx.p().value()) == ext_identity(ctx);
}

ExtElement random_ext_element(const GroupContext& ctx, Rng& rng) {
  GroupElement h = random_element(ctx, rng);
  return {std::move(h), static_cast<std::uint8_t>(rng.coin() ? 1 : 0)};
}

std::string to_string(const GroupContext& ctx, const ExtElement& a) {
  return "(" + to_string(ctx, a.h) + ", " + std::to_string(a.eps) + ")";
}

ExtElement parse_ext_element(const GroupContext& ctx, std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  const auto comma = text.rfind(',', close);
  if (open == std::string_view::npos || close == std::string_view::npos || comma == std::string_view::npos ||
      comma < open) {
    throw ParseError("extension element must look like (<element>, <0|1>)");
  }
  std::string_view bit = text.substr(comma + 1, close - comma - 1);
  while (!bit.empty() && bit.front() == ' ') bit.remove_prefix(1);
  while (!bit.empty() && bit.back() == ' ') bit.remove_suffix(1);
  if (bit != "0" && bit != "1") throw ParseError("extension bit must be 0 or 1");
  return {parse_element(ctx, text.substr(open + 1, comma - open - 1)),
          static_cast<std::uint8_t>(bit == "1" ? 1 : 0)};
}

}  // namespace mekler
