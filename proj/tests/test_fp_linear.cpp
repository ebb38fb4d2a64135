#include <cmath>

#include "doctest.h"
#include "mekler/fp_linear.hpp"
#include "mekler/random.hpp"

using namespace mekler;

namespace {

using Mat = FpMatrix<int, int>;
using Vec = FpVector<int>;

Mat random_matrix(Prime p, int rows, int cols, Rng& rng) {
  std::vector<int> columns;
  for (int c = 0; c < cols; ++c) columns.push_back(c);
  Mat m(p, columns);
  for (int r = 0; r < rows; ++r) {
    std::vector<std::pair<int, std::int64_t>> terms;
    for (int c = 0; c < cols; ++c) {
      // Sparse-ish rows so that ranks vary.
      if (rng.below(3) == 0) terms.emplace_back(c, static_cast<std::int64_t>(rng.below(p.value())));
    }
    m.add_row(r, Vec::from_terms(p, terms));
  }
  return m;
}

// Counts x in F_p^cols with m x = 0 by enumerating every vector.
std::uint64_t brute_kernel_count(const std::vector<Mat>& ms) {
  const std::uint32_t p = ms.front().modulus().value();
  const auto cols = ms.front().num_columns();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cols; ++i) total *= p;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::pair<int, std::int64_t>> terms;
    std::uint64_t rest = code;
    for (std::size_t c = 0; c < cols; ++c) {
      terms.emplace_back(static_cast<int>(c), static_cast<std::int64_t>(rest % p));
      rest /= p;
    }
    const Vec x = Vec::from_terms(ms.front().modulus(), terms);
    bool zero = true;
    for (const auto& m : ms) {
      for (auto v : m.apply(x)) zero = zero && v == 0;
    }
    count += zero;
  }
  return count;
}

std::size_t log_p(std::uint64_t n, std::uint32_t p) {
  std::size_t k = 0;
  while (n > 1) {
    REQUIRE(n % p == 0);
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("primes and scalars") {
  CHECK(is_prime(3));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_THROWS_AS(Prime(2), InvalidArgument);
  CHECK_THROWS_AS(Prime(15), InvalidArgument);
  const Prime p(5);
  const FpScalar a(3, p), b(4, p);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 4);
  CHECK((a * b).value() == 2);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(FpScalar(-1, p).value() == 4);
  CHECK_THROWS_AS(a + FpScalar(1, Prime(3)), ModulusMismatch);
  CHECK_THROWS(FpScalar(0, p).inverse());
}

TEST_CASE("vec_add examples") {
  const Prime p3(3), p5(5);
  CHECK(vec_add(Vec(p3, {{7, 1}}), Vec(p3, {{7, 2}})).empty());
  const Vec s = vec_add(Vec(p3, {{7, 1}}), Vec(p3, {{2, 1}}));
  CHECK(s.size() == 2);
  CHECK(s[7] == 1);
  CHECK(s[2] == 1);
  CHECK(vec_add(Vec(p5, {{7, 2}}), Vec(p5, {{7, 2}}))[7] == 4);
  CHECK_THROWS_AS(vec_add(Vec(p3, {{1, 1}}), Vec(p5, {{1, 1}})), ModulusMismatch);
}

TEST_CASE("vectors keep canonical sparse form") {
  const Prime p(3);
  const Vec v = Vec::from_terms(p, {{1, 3}, {2, -1}, {2, 1}, {0, 4}});
  CHECK(v.size() == 1);
  CHECK(v[0] == 1);
  CHECK(v.scaled(3).empty());
  CHECK(v - v == Vec(p));
  CHECK(Vec(p, {{1, 1}, {2, 2}}) == Vec(p, {{2, 2}, {1, 1}}));
}

TEST_CASE("kernel_basis examples") {
  const Prime p(3);
  Mat zero(p, {0, 1, 2});
  CHECK(kernel_basis(zero).size() == 3);

  Mat id(p, {0, 1});
  id.add_row(0, Vec(p, {{0, 1}}));
  id.add_row(1, Vec(p, {{1, 1}}));
  CHECK(kernel_basis(id).empty());

  // (1 1): kernel spanned by (2, 1) with the free column normalized to 1;
  // brute force over F_3^2 gives the same line.
  Mat one(p, {0, 1});
  one.add_row(0, Vec(p, {{0, 1}, {1, 1}}));
  const auto basis = kernel_basis(one);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == Vec(p, {{0, 2}, {1, 1}}));
  CHECK(brute_kernel_count({one}) == 3);
}

TEST_CASE("kernel_intersection_dim examples") {
  const Prime p(3);
  CHECK(kernel_intersection_dim(std::vector<Mat>{Mat(p, {0, 1, 2, 3}), Mat(p, {0, 1, 2, 3})}) == 4);
  Mat id(p, {0, 1});
  id.add_row(0, Vec(p, {{0, 1}}));
  id.add_row(1, Vec(p, {{1, 1}}));
  CHECK(kernel_intersection_dim(std::vector<Mat>{id}) == 0);

  Mat f(p, {0, 1, 2}), g(p, {0, 1, 2});
  f.add_row(0, Vec(p, {{0, 1}, {1, 1}}));
  g.add_row(0, Vec(p, {{1, 1}, {2, 2}}));
  CHECK(kernel_intersection_dim(std::vector<Mat>{f, g}) == 1);
  CHECK(brute_kernel_count({f, g}) == 3);

  CHECK_THROWS_AS(kernel_intersection_dim(std::vector<Mat>{f, Mat(p, {0, 1})}), ColumnMismatch);
  CHECK_THROWS_AS(kernel_intersection_dim(std::vector<Mat>{f, Mat(Prime(5), {0, 1, 2})}), ModulusMismatch);
}

TEST_CASE("rows outside the column set are rejected") {
  const Prime p(3);
  Mat m(p, {0, 1});
  CHECK_THROWS_AS(m.add_row(0, Vec(p, {{5, 1}})), ColumnMismatch);
  CHECK_THROWS_AS(m.add_row(0, Vec(Prime(5), {{0, 1}})), ModulusMismatch);
}

TEST_CASE("random matrices: kernel vectors annihilate, rank-nullity, brute force") {
  Rng rng(20261014);
  for (std::uint32_t q : {3u, 5u}) {
    const Prime p(q);
    for (int trial = 0; trial < 200; ++trial) {
      const int cols = 1 + static_cast<int>(rng.below(q == 3 ? 8 : 6));
      const int rows = static_cast<int>(rng.below(8));
      const Mat m = random_matrix(p, rows, cols, rng);
      const auto basis = kernel_basis(m);
      CHECK(basis.size() + rank(m) == m.num_columns());
      for (const auto& b : basis) {
        for (auto v : m.apply(b)) CHECK(v == 0);
      }
      // Basis vectors are independent: their leading free columns differ.
      CHECK(kernel_dim(m) == basis.size());
      CHECK(log_p(brute_kernel_count({m}), q) == basis.size());
    }
  }
}

TEST_CASE("kernel intersections match brute force on up to 10 columns") {
  Rng rng(7);
  const Prime p(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int cols = 1 + static_cast<int>(rng.below(10));
    std::vector<Mat> ms;
    const int k = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < k; ++i) ms.push_back(random_matrix(p, static_cast<int>(rng.below(4)), cols, rng));
    CHECK(log_p(brute_kernel_count(ms), 3) == kernel_intersection_dim(ms));
  }
}
