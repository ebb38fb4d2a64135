#include <set>

#include "doctest.h"
#include "mekler/appendix_q.hpp"

using namespace mekler;

namespace {

// Smallest k such that some k translates cover G, by trying every k-subset.
std::size_t brute_cover(const FiniteGroup& g, const ElementSet& s) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> masks;
  for (Element t = 0; t < n; ++t) {
    std::uint64_t m = 0;
    for (Element x : s) m |= std::uint64_t{1} << g.mul(t, x);
    masks.push_back(m);
  }
  const std::uint64_t full = n == 64 ? ~0ull : (std::uint64_t{1} << n) - 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint64_t u = 0;
      for (auto i : idx) u |= masks[i];
      if (u == full) return k;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return n;
}

std::size_t brute_roots(const FiniteGroup& g, Element x, int n) {
  auto power = [&](Element a) {
    Element r = g.identity();
    for (int i = 0; i < n; ++i) r = g.mul(r, a);
    return r;
  };
  std::size_t c = 0;
  for (Element y = 0; y < g.order(); ++y) c += power(y) == power(x);
  return c;
}

}  // namespace

TEST_CASE("permutations and parsing") {
  const auto c = parse_permutation("(1 2 3)");
  CHECK(c.image() == std::vector<std::uint32_t>{1, 2, 0});
  CHECK(parse_permutation("2 3 1") == c);
  CHECK(c.cycles() == "(1 2 3)");
  CHECK(parse_permutation("()").cycles() == "()");
  // (1 2)(2 3) composes right to left: 3 -> 2 -> 1.
  const auto pq = parse_permutation("(1 2)(2 3)");
  CHECK(pq(2) == 0);
  CHECK(pq == parse_permutation("(1 2)") * parse_permutation("(2 3)"));
  CHECK_THROWS_AS(parse_permutation("(1 1)"), ParseError);
  CHECK_THROWS_AS(parse_permutation("1 1 2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(0 1)"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2"), ParseError);
  const auto list = parse_permutation_list("# S3\n(1 2)\n\n2 3 1\n");
  CHECK(list.size() == 2);
}

TEST_CASE("groups from permutation generators") {
  CHECK(from_permutation_generators({parse_permutation("(1 2 3)")}).order() == 3);
  const auto s3 = from_permutation_generators({parse_permutation("(1 2)"), parse_permutation("(1 2 3)")});
  CHECK(s3.order() == 6);
  CHECK(s3.name(s3.identity()) == "()");
  CHECK(symmetric_group(4).order() == 24);
  CHECK_THROWS_AS(from_permutation_generators({parse_permutation("(1 2)"), parse_permutation("(1 2 3 4 5 6 7 8)")}, 100),
                  InvalidArgument);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto g = sl2_group(q);
    // Independent count: every 2x2 matrix over F_q with determinant 1.
    std::set<std::string> det_one;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
          for (std::uint32_t d = 0; d < q; ++d)
            if ((a * d + q * q - b * c) % q == 1)
              det_one.insert("[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
                             std::to_string(d) + "]]");
    CHECK(g.order() == q * (q * q - 1));
    std::set<std::string> names;
    for (Element e = 0; e < g.order(); ++e) names.insert(g.name(e));
    CHECK(names == det_one);
    CHECK(g.name(g.identity()) == "[[1,0],[0,1]]");
  }
  CHECK_THROWS(sl2_group(4));
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS((void)FiniteGroup({{0, 1}, {1, 1}}), InvalidArgument);
  CHECK_THROWS_AS((void)FiniteGroup({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), InvalidArgument);  // Latin, no identity
  // A Latin square with identity that is not associative (order 5 loop).
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS((void)FiniteGroup(loop), InvalidArgument);
  const auto c5 = cyclic_group(5);
  CHECK(parse_cayley_table(to_cayley_text(c5)).table() == c5.table());
  CHECK_THROWS_AS(parse_cayley_table("2\n0 1\n1"), ParseError);
  CHECK_THROWS_AS(parse_cayley_table("2\n0 1\n1 0\n7"), ParseError);
  const auto big = sl2_group(7);
  CHECK_FALSE(big.associativity_exhaustive());
  CHECK(c5.associativity_exhaustive());
}

TEST_CASE("root counts, A sets and power images") {
  const auto c7 = cyclic_group(7);
  for (Element x = 0; x < 7; ++x) CHECK(nth_roots_count(c7, x, 3) == 1);
  const auto c2 = cyclic_group(2);
  CHECK(nth_roots_count(c2, c2.identity(), 2) == 2);
  const auto s3 = symmetric_group(3);
  CHECK(nth_roots_count(s3, s3.identity(), 2) == 4);
  CHECK(brute_roots(s3, s3.identity(), 2) == 4);

  CHECK(a_nm_set(c7, 2, 1) == c7.all());
  CHECK(a_nm_set(c2, 2, 1).empty());
  CHECK(a_nm_set(s3, 2, 6) == s3.all());

  CHECK(power_image(s3, 1) == s3.all());
  CHECK(power_image(cyclic_group(4), 2).size() == 2);
  CHECK(power_image(s3, 2).size() == 3);
  CHECK_THROWS_AS(nth_roots_count(s3, 0, 1), InvalidArgument);

  for (const auto& g : {symmetric_group(3), symmetric_group(4), sl2_group(3), cyclic_group(12)}) {
    for (int n = 2; n <= 4; ++n) {
      for (Element x = 0; x < g.order(); ++x) CHECK(nth_roots_count(g, x, n) == brute_roots(g, x, n));
      for (std::size_t m = 1; m < 6; ++m) {
        const auto a = a_nm_set(g, n, m), b = a_nm_set(g, n, m + 1);
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
      }
    }
  }
}

TEST_CASE("unique root extraction") {
  CHECK_FALSE(unique_root_extraction_check(cyclic_group(2), 2));
  CHECK(unique_root_extraction_check(cyclic_group(7), 6));
  CHECK_FALSE(unique_root_extraction_check(cyclic_group(7), 7));
  // Two isolated naturals, p = 3: Heisenberg group of order 27.
  const GroupContext ctx(build_a_fragment({0, 1}, {}), Prime(3));
  const auto h = mekler_cayley_table(ctx);
  CHECK(h.order() == 27);
  CHECK(unique_root_extraction_check(h, std::vector<std::int64_t>{2, 4, 5}));
  CHECK_FALSE(unique_root_extraction_check(h, std::vector<std::int64_t>{3}));
  for (Element x = 0; x < h.order(); ++x) CHECK(h.pow(x, 3) == h.identity());
  CHECK_THROWS(mekler_cayley_table(GroupContext(build_full_fragment({0, 1}), Prime(3))));
}

TEST_CASE("covering numbers") {
  const auto s3 = symmetric_group(3);
  CHECK(covering_number(s3, s3.all()).number == 1);
  CHECK(covering_number(s3, {s3.identity()}).number == 6);
  const auto a3 = power_image(s3, 2);
  const auto c = covering_number(s3, a3);
  CHECK(c.number == 2);
  CHECK(c.exact);
  CHECK(verify_cover(s3, a3, c.certificate));
  CHECK_THROWS_AS(covering_number(s3, {}), InvalidArgument);

  Rng rng(3);
  for (const auto& g : {symmetric_group(3), cyclic_group(8), sl2_group(3), from_permutation_generators(
                            {parse_permutation("(1 2 3 4)"), parse_permutation("(1 3)")})}) {
    for (int trial = 0; trial < 25; ++trial) {
      ElementSet s;
      for (Element x = 0; x < g.order(); ++x)
        if (rng.below(4) == 0) s.push_back(x);
      if (s.empty()) s.push_back(static_cast<Element>(rng.below(g.order())));
      const auto r = covering_number(g, s);
      CHECK(r.exact);
      CHECK(r.certificate.covered);
      CHECK(verify_cover(g, s, r.certificate));
      CHECK(r.number * s.size() >= g.order());
      CHECK(r.greedy_bound >= r.number);
      if (g.order() <= 24) CHECK(r.number == brute_cover(g, s));
    }
  }
  // Above the cap only the greedy bound is reported.
  const auto big = sl2_group(5);
  const auto capped = covering_number(big, power_image(big, 2), 50);
  CHECK_FALSE(capped.exact);
  CHECK(capped.number == capped.greedy_bound);
  CHECK(capped.certificate.covered);
}

TEST_CASE("covers of squares in SL2") {
  for (std::uint32_t q : {3u, 5u}) {
    const auto g = sl2_group(q);
    const auto sq = power_image(g, 2);
    const auto r = covering_number(g, sq);
    CHECK(r.exact);
    CHECK(verify_cover(g, sq, r.certificate));
    MESSAGE("SL2(" << q << "): |G^2| = " << sq.size() << ", cover = " << r.number);
  }
}

TEST_CASE("coset covers from a normal subgroup of small index") {
  // C3 wr C2 = (C3 x C3) : C2 on 6 points, H = C3 x C3.
  const auto w = from_permutation_generators({parse_permutation("(1 2 3)"), parse_permutation("(1 4)(2 5)(3 6)")});
  CHECK(w.order() == 18);
  const auto h = generated_subgroup(w, {w.find("(1 2 3)"), w.find("(4 5 6)")});
  CHECK(h.size() == 9);
  CHECK(is_normal_subgroup(w, h));
  for (auto [p, m] : {std::pair<std::uint32_t, std::size_t>{3, 9}, {5, 1}}) {
    const auto c = coset_cover_check(w, h, p, m);
    CHECK(c.hypotheses);
    CHECK(c.roots_stay_in_h);
    CHECK(c.inclusion);
    CHECK(c.covered);
    CHECK(c.representatives.size() == 2);
  }
  const auto s3 = symmetric_group(3);
  const auto a3 = power_image(s3, 2);
  const auto sc = coset_cover_check(s3, a3, 3, 3);
  CHECK(sc.hypotheses);
  CHECK(sc.roots_stay_in_h);
  CHECK(sc.inclusion);
  CHECK(sc.covered);
  CHECK_FALSE(coset_cover_check(s3, a3, 2, 3).hypotheses);  // p must exceed the index
  CHECK_FALSE(coset_cover_check(s3, {0, 1}, 3, 3).hypotheses);
}

TEST_CASE("property Q report") {
  Report rep;
  rep.command = "qprobe";
  append_property_q_report(rep, {{"C2", cyclic_group(2)}, {"SL2(3)", sl2_group(3)}}, 2, 1);
  CHECK(rep.all_pass());
  const auto text = rep.to_text();
  CHECK(text.find("cover(A_{n,m}) = none") != std::string::npos);
  CHECK(text.find("finite proxy") != std::string::npos);
}
