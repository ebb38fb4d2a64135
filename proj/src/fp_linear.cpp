#include "mekler/fp_linear.hpp"

#include <string>

namespace mekler {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p)) {
    throw InvalidArgument("modulus must be an odd prime, got " + std::to_string(p));
  }
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw InvalidArgument("mod_inverse: zero has no inverse");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

FpScalar FpScalar::inverse() const { return FpScalar(mod_inverse(value_, p_.value()), p_); }

namespace detail {

RowReducer::RowReducer(std::uint32_t p, std::size_t num_columns)
    : p_(p), n_(num_columns), scratch_(num_columns, 0), pivot_row_(num_columns), has_pivot_(num_columns) {}

bool RowReducer::add_row(std::span<const std::pair<std::size_t, std::uint32_t>> row) {
  std::size_t lo = n_;
  for (const auto& [c, v] : row) {
    scratch_[c] = (scratch_[c] + v) % p_;
    lo = std::min(lo, c);
  }
  // Sweep left to right, eliminating against existing pivots. Entries only
  // ever appear to the right of the current column.
  bool grew = false;
  for (std::size_t c = lo; c < n_; ++c) {
    const std::uint32_t v = scratch_[c];
    if (v == 0) continue;
    if (has_pivot_[c]) {
      const std::uint32_t f = p_ - v;
      for (const auto& [pc, pv] : pivot_row_[c]) {
        scratch_[pc] = (scratch_[pc] + mod_mul(pv, f, p_)) % p_;
      }
      continue;
    }
    const std::uint32_t inv = mod_inverse(v, p_);
    auto& piv = pivot_row_[c];
    for (std::size_t k = c; k < n_; ++k) {
      if (scratch_[k] != 0) {
        piv.emplace_back(k, mod_mul(scratch_[k], inv, p_));
        scratch_[k] = 0;
      }
    }
    has_pivot_[c] = true;
    pivot_order_.push_back(c);
    grew = true;
    break;
  }
  std::fill(scratch_.begin() + static_cast<std::ptrdiff_t>(std::min(lo, n_)), scratch_.end(), 0u);
  return grew;
}

std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> RowReducer::kernel() const {
  // Back-substitute to reduced echelon form, last pivot column first.
  std::vector<std::size_t> pivots(pivot_order_);
  std::sort(pivots.begin(), pivots.end());
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> reduced(n_);
  std::vector<std::uint32_t> row(n_, 0);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const std::size_t c = *it;
    for (const auto& [k, v] : pivot_row_[c]) row[k] = v;
    for (std::size_t k = c + 1; k < n_; ++k) {
      const std::uint32_t v = row[k];
      if (v == 0 || !has_pivot_[k]) continue;
      const std::uint32_t f = p_ - v;
      for (const auto& [rk, rv] : reduced[k]) row[rk] = (row[rk] + mod_mul(rv, f, p_)) % p_;
    }
    for (std::size_t k = c; k < n_; ++k) {
      if (row[k] != 0) reduced[c].emplace_back(k, row[k]);
      row[k] = 0;
    }
  }

  // Free column f contributes e_f - sum_i R[i][f] e_{pivot_i}.
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> basis;
  std::vector<std::size_t> slot(n_, SIZE_MAX);
  for (std::size_t c = 0; c < n_; ++c) {
    if (!has_pivot_[c]) {
      slot[c] = basis.size();
      basis.push_back({});
    }
  }
  for (std::size_t c : pivots) {
    for (const auto& [k, v] : reduced[c]) {
      if (k != c && slot[k] != SIZE_MAX) basis[slot[k]].emplace_back(c, p_ - v);
    }
  }
  for (std::size_t c = 0; c < n_; ++c) {
    if (slot[c] == SIZE_MAX) continue;
    auto& vec = basis[slot[c]];
    vec.emplace_back(c, 1u);
    std::sort(vec.begin(), vec.end());
  }
  return basis;
}

}  // namespace detail
}  // namespace mekler
