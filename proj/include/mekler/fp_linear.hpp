#pragma once

// Exact linear algebra over the prime field F_p.
//
// Vectors are sparse and canonical: entries are kept sorted by key and no
// stored coefficient is zero, so structural equality is vector equality.
// Every vector and matrix carries its modulus; mixing moduli throws.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mekler/error.hpp"

namespace mekler {

bool is_prime(std::uint64_t n);

// An odd prime modulus. Validated once on construction.
class Prime {
 public:
  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

inline std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

class FpScalar {
 public:
  FpScalar(std::int64_t value, Prime p) : value_(mod_reduce(value, p.value())), p_(p) {}

  std::uint32_t value() const noexcept { return value_; }
  Prime modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpScalar inverse() const;

  friend FpScalar operator+(FpScalar a, FpScalar b) {
    check(a, b);
    return FpScalar(static_cast<std::int64_t>(a.value_) + b.value_, a.p_);
  }
  friend FpScalar operator-(FpScalar a, FpScalar b) {
    check(a, b);
    return FpScalar(static_cast<std::int64_t>(a.value_) - b.value_, a.p_);
  }
  friend FpScalar operator*(FpScalar a, FpScalar b) {
    check(a, b);
    return FpScalar(mod_mul(a.value_, b.value_, a.p_.value()), a.p_);
  }
  friend bool operator==(FpScalar, FpScalar) = default;

 private:
  static void check(FpScalar a, FpScalar b) {
    if (a.p_ != b.p_) throw ModulusMismatch("FpScalar: modulus mismatch");
  }

  std::uint32_t value_;
  Prime p_;
};

template <class K>
class FpVector {
 public:
  using Entry = std::pair<K, std::uint32_t>;

  explicit FpVector(Prime p) : p_(p) {}

  FpVector(Prime p, std::initializer_list<std::pair<K, std::int64_t>> terms)
      : FpVector(from_terms(p, std::vector<std::pair<K, std::int64_t>>(terms))) {}

  // Terms may come in any order and repeat keys; repeated keys are summed.
  static FpVector from_terms(Prime p, std::vector<std::pair<K, std::int64_t>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    FpVector out(p);
    out.entries_.reserve(terms.size());
    const std::uint32_t q = p.value();
    for (std::size_t i = 0; i < terms.size();) {
      std::int64_t acc = 0;
      std::size_t j = i;
      for (; j < terms.size() && !(terms[i].first < terms[j].first); ++j) {
        acc = (acc + mod_reduce(terms[j].second, q)) % q;
      }
      if (acc != 0) out.entries_.emplace_back(terms[i].first, static_cast<std::uint32_t>(acc));
      i = j;
    }
    return out;
  }

  // Entries must already be sorted by key, unique and nonzero.
  static FpVector from_sorted(Prime p, std::vector<Entry> entries) {
    FpVector out(p);
    out.entries_ = std::move(entries);
    return out;
  }

  Prime modulus() const noexcept { return p_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::uint32_t operator[](const K& key) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& e, const K& k) { return e.first < k; });
    return (it != entries_.end() && !(key < it->first)) ? it->second : 0u;
  }

  std::vector<K> support() const {
    std::vector<K> keys;
    keys.reserve(entries_.size());
    for (const auto& e : entries_) keys.push_back(e.first);
    return keys;
  }

  FpVector scaled(std::int64_t factor) const {
    const std::uint32_t q = p_.value();
    const std::uint32_t f = mod_reduce(factor, q);
    FpVector out(p_);
    if (f == 0) return out;
    out.entries_.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.entries_.emplace_back(k, mod_mul(v, f, q));
    return out;
  }

  FpVector operator-() const { return scaled(-1); }

  FpVector& operator+=(const FpVector& other) {
    *this = combine(*this, other, 1);
    return *this;
  }
  FpVector& operator-=(const FpVector& other) {
    *this = combine(*this, other, p_.value() - 1);
    return *this;
  }

  friend FpVector operator+(const FpVector& a, const FpVector& b) { return combine(a, b, 1); }
  friend FpVector operator-(const FpVector& a, const FpVector& b) {
    return combine(a, b, a.p_.value() - 1);
  }

  // a + factor * b, merged in one pass.
  static FpVector combine(const FpVector& a, const FpVector& b, std::uint32_t factor) {
    if (a.p_ != b.p_) throw ModulusMismatch("FpVector: modulus mismatch");
    const std::uint32_t q = a.p_.value();
    FpVector out(a.p_);
    out.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
      if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
        out.entries_.push_back(*i++);
      } else if (i == a.entries_.end() || j->first < i->first) {
        const std::uint32_t v = mod_mul(j->second, factor, q);
        if (v != 0) out.entries_.emplace_back(j->first, v);
        ++j;
      } else {
        const std::uint32_t v = (i->second + mod_mul(j->second, factor, q)) % q;
        if (v != 0) out.entries_.emplace_back(i->first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend bool operator==(const FpVector& a, const FpVector& b) {
    return a.p_ == b.p_ && a.entries_ == b.entries_;
  }

 private:
  Prime p_;
  std::vector<Entry> entries_;
};

template <class K>
FpVector<K> vec_add(const FpVector<K>& a, const FpVector<K>& b) {
  return a + b;
}

// Rows of sparse vectors over an explicit, ordered column key set. The column
// order fixes pivoting, so kernels come out in a deterministic echelon form.
template <class R, class C>
class FpMatrix {
 public:
  FpMatrix(Prime p, std::vector<C> columns) : p_(p), columns_(std::move(columns)) {
    std::sort(columns_.begin(), columns_.end());
    columns_.erase(std::unique(columns_.begin(), columns_.end(),
                               [](const C& a, const C& b) { return !(a < b) && !(b < a); }),
                   columns_.end());
  }

  void add_row(R key, FpVector<C> row) {
    if (row.modulus() != p_) throw ModulusMismatch("FpMatrix: row modulus mismatch");
    for (const auto& e : row.entries()) {
      if (!std::binary_search(columns_.begin(), columns_.end(), e.first)) {
        throw ColumnMismatch("FpMatrix: row entry outside the column set");
      }
    }
    row_keys_.push_back(std::move(key));
    rows_.push_back(std::move(row));
  }

  Prime modulus() const noexcept { return p_; }
  const std::vector<C>& columns() const noexcept { return columns_; }
  const std::vector<R>& row_keys() const noexcept { return row_keys_; }
  const std::vector<FpVector<C>>& rows() const noexcept { return rows_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::size_t num_columns() const noexcept { return columns_.size(); }

  // m * x, keyed by row.
  std::vector<std::uint32_t> apply(const FpVector<C>& x) const {
    const std::uint32_t q = p_.value();
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
      std::uint64_t acc = 0;
      for (const auto& [k, v] : row.entries()) acc = (acc + static_cast<std::uint64_t>(v) * x[k]) % q;
      out.push_back(static_cast<std::uint32_t>(acc));
    }
    return out;
  }

 private:
  Prime p_;
  std::vector<C> columns_;
  std::vector<R> row_keys_;
  std::vector<FpVector<C>> rows_;
};

namespace detail {

// Incremental row echelon form over columns 0..n-1. Pivot rows are kept
// sparse and normalized (leading coefficient 1).
class RowReducer {
 public:
  RowReducer(std::uint32_t p, std::size_t num_columns);

  // Row given as (column, value) pairs, any order. Returns true if the rank grew.
  bool add_row(std::span<const std::pair<std::size_t, std::uint32_t>> row);

  std::size_t rank() const noexcept { return pivot_order_.size(); }
  std::size_t num_columns() const noexcept { return n_; }

  // Basis of the null space, one vector per free column, in reduced echelon
  // form: the free column carries coefficient 1, other free columns 0.
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> kernel() const;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::uint32_t> scratch_;
  // pivot_row_[c] is the row whose leading column is c (empty if none).
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> pivot_row_;
  std::vector<bool> has_pivot_;
  std::vector<std::size_t> pivot_order_;
};

template <class C>
std::size_t column_index(const std::vector<C>& columns, const C& key) {
  return static_cast<std::size_t>(std::lower_bound(columns.begin(), columns.end(), key) -
                                  columns.begin());
}

template <class R, class C>
void feed_rows(RowReducer& reducer, const FpMatrix<R, C>& m) {
  std::vector<std::pair<std::size_t, std::uint32_t>> dense;
  const auto& cols = m.columns();
  for (const auto& row : m.rows()) {
    dense.clear();
    // Row entries and columns are both sorted: walk them together.
    std::size_t c = 0;
    for (const auto& [k, v] : row.entries()) {
      while (cols[c] < k) ++c;
      dense.emplace_back(c, v);
    }
    reducer.add_row(dense);
  }
}

}  // namespace detail

template <class R, class C>
std::size_t rank(const FpMatrix<R, C>& m) {
  detail::RowReducer reducer(m.modulus().value(), m.num_columns());
  detail::feed_rows(reducer, m);
  return reducer.rank();
}

template <class R, class C>
std::vector<FpVector<C>> kernel_basis(const FpMatrix<R, C>& m) {
  detail::RowReducer reducer(m.modulus().value(), m.num_columns());
  detail::feed_rows(reducer, m);
  std::vector<FpVector<C>> basis;
  for (const auto& vec : reducer.kernel()) {
    std::vector<typename FpVector<C>::Entry> entries;
    entries.reserve(vec.size());
    for (const auto& [c, v] : vec) entries.emplace_back(m.columns()[c], v);
    basis.push_back(FpVector<C>::from_sorted(m.modulus(), std::move(entries)));
  }
  return basis;
}

template <class R, class C>
std::size_t kernel_dim(const FpMatrix<R, C>& m) {
  return m.num_columns() - rank(m);
}

// Stacks all rows; matrices must agree on modulus and column set.
template <class R, class C>
FpMatrix<R, C> stack(std::span<const FpMatrix<R, C>> ms) {
  if (ms.empty()) throw InvalidArgument("stack: no matrices");
  FpMatrix<R, C> out(ms.front().modulus(), ms.front().columns());
  for (const auto& m : ms) {
    if (m.modulus() != out.modulus()) throw ModulusMismatch("stack: modulus mismatch");
    if (m.columns() != out.columns()) throw ColumnMismatch("stack: column sets differ");
    for (std::size_t i = 0; i < m.num_rows(); ++i) out.add_row(m.row_keys()[i], m.rows()[i]);
  }
  return out;
}

template <class R, class C>
std::size_t kernel_intersection_dim(std::span<const FpMatrix<R, C>> ms) {
  return kernel_dim(stack(ms));
}

template <class R, class C>
std::size_t kernel_intersection_dim(const std::vector<FpMatrix<R, C>>& ms) {
  return kernel_intersection_dim(std::span<const FpMatrix<R, C>>(ms));
}

}  // namespace mekler
