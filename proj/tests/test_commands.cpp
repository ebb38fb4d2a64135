#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "mekler/commands.hpp"

using namespace mekler;

namespace {

RunConfig small_config() {
  RunConfig c;
  c.naturals = {0, 1, 2};
  c.r_edges = {NaturalPair::of(0, 1)};
  c.support_budget = 2;
  c.random_samples = 300;
  return c;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/mekler_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig c = small_config();
  c.p = 2;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  const auto r = guarded("verify-lemmas", [&] { return cmd_verify_lemmas(c); });
  CHECK(r.exit_code == kExitConfig);
  CHECK(r.report.to_text().find("odd prime") != std::string::npos);

  c = small_config();
  c.p = 9;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = small_config();
  c.random_samples = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = small_config();
  c.r_edges = {NaturalPair::of(0, 5)};
  CHECK_THROWS_AS(c.validate(), InadequateFragment);
}

TEST_CASE("missing gadgets give an adequacy error with a hint") {
  RunConfig c = small_config();
  c.gadget_pairs = std::set<NaturalPair>{NaturalPair::of(0, 1)};
  c.auxiliary_naturals = 3;
  const auto r = guarded("verify-lemmas", [&] { return cmd_verify_lemmas(c); });
  CHECK(r.exit_code == kExitConfig);
  CHECK(r.report.to_text().find("hint:") != std::string::npos);
}

TEST_CASE("verify-lemmas on a small fragment passes and is reproducible") {
  const RunConfig c = small_config();
  const auto a = guarded("verify-lemmas", [&] { return cmd_verify_lemmas(c); });
  CHECK(a.exit_code == kExitPass);
  CHECK(a.report.num_failures() == 0);
  CHECK(a.report.num_checks() > 20);
  const auto b = cmd_verify_lemmas(c);
  CHECK(a.report.to_text() == b.report.to_text());
  CHECK(a.report.to_json() == b.report.to_json());
  CHECK(a.report.to_text().find("seed: 1") != std::string::npos);
}

TEST_CASE("nice command exit codes") {
  GraphDocument tri;
  tri.naturals = {0, 1, 2};
  tri.extra_edges = {{Vertex::natural(0), Vertex::natural(1)},
                     {Vertex::natural(1), Vertex::natural(2)},
                     {Vertex::natural(0), Vertex::natural(2)}};
  CHECK(cmd_nice(tri).exit_code == kExitFailure);

  GraphDocument sq;
  sq.naturals = {0, 1, 2, 3};
  sq.extra_edges = {{Vertex::natural(0), Vertex::natural(1)},
                    {Vertex::natural(1), Vertex::natural(2)},
                    {Vertex::natural(2), Vertex::natural(3)},
                    {Vertex::natural(3), Vertex::natural(0)}};
  const auto rs = cmd_nice(sq);
  CHECK(rs.exit_code == kExitFailure);
  CHECK(rs.report.to_text().find("4-cycle") != std::string::npos);

  CHECK(cmd_nice(document_for({0, 1, 2}, all_pairs({0, 1, 2}))).exit_code == kExitPass);
}

TEST_CASE("roundtrip command") {
  GraphDocument empty;
  empty.naturals = {0, 1};
  empty.r_edges = std::set<NaturalPair>{};
  const auto r = cmd_roundtrip(empty, "both", RunConfig{});
  CHECK(r.exit_code == kExitPass);
  CHECK(r.report.to_text().find("roundtrip/agreement") != std::string::npos);

  GraphDocument path;
  path.naturals = {0, 1, 2};
  path.r_edges = std::set<NaturalPair>{NaturalPair::of(0, 1), NaturalPair::of(1, 2)};
  CHECK(cmd_roundtrip(path, "up", RunConfig{}).exit_code == kExitPass);
  CHECK_THROWS_AS(cmd_roundtrip(path, "sideways", RunConfig{}), InvalidArgument);

  path.p = 2;
  CHECK(guarded("roundtrip", [&] { return cmd_roundtrip(path, "up", RunConfig{}); }).exit_code == kExitConfig);
}

TEST_CASE("ext-check with given elements") {
  const RunConfig c = small_config();
  const auto r = cmd_ext_check(c, {"(x[n:0]^1, 0)", "(x[n:0]^1 * x[g:0,1:1]^2, 1)"});
  CHECK(r.exit_code == kExitPass);
  const auto text = r.report.to_text();
  CHECK(text.find("in H") != std::string::npos);
  CHECK(text.find("outside H") != std::string::npos);
  CHECK(guarded("ext-check", [&] { return cmd_ext_check(c, {"(x[n:0]^1"}); }).exit_code == kExitConfig);
}

TEST_CASE("group sources") {
  const RunConfig c = small_config();
  CHECK(load_group("sl2:3", c).group.order() == 24);
  CHECK(load_group("cyclic:5", c).group.order() == 5);
  CHECK(load_group("symmetric:3", c).group.order() == 6);
  CHECK_THROWS_AS(load_group("bogus", c), InvalidArgument);
  CHECK_THROWS_AS(load_group("cyclic:x", c), InvalidArgument);
  CHECK_THROWS(load_group("perms:/nonexistent/file", c));

  const auto perms = temp_file("s3.perms", "# S3\n(1 2)\n(1 2 3)\n");
  CHECK(load_group("perms:" + perms, c).group.order() == 6);
  const auto table = temp_file("c3.table", to_cayley_text(cyclic_group(3)));
  CHECK(load_group("table:" + table, c).group.order() == 3);
  std::remove(perms.c_str());
  std::remove(table.c_str());

  RunConfig tiny;
  tiny.naturals = {0, 1};
  tiny.gadget_pairs = std::set<NaturalPair>{};
  tiny.r_edges = {};
  CHECK(load_group("mekler", tiny).group.order() == 27);
}

TEST_CASE("qprobe examples") {
  const RunConfig c;
  const auto whole = cmd_qprobe({"cyclic:5"}, 2, 1, c);
  CHECK(whole.exit_code == kExitPass);
  const auto text = whole.report.to_text();
  CHECK(text.find("cover(G^n) = 1 (exact)") != std::string::npos);

  const auto c2 = cmd_qprobe({"cyclic:2"}, 2, 1, c).report.to_text();
  CHECK(c2.find("unique_root_extraction(n <= 2) = false") != std::string::npos);

  const auto sl = cmd_qprobe({}, 2, 1, c).report.to_text();
  CHECK(sl.find("|G^n| = 10") != std::string::npos);
  CHECK(sl.find("cover(G^n) = 3 (exact)") != std::string::npos);

  CHECK_THROWS_AS(cmd_qprobe({}, 1, 1, c), InvalidArgument);
}
