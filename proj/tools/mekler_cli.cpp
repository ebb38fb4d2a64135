// mekler_cli: verification runs over Mekler groups of graph fragments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mekler/commands.hpp"

namespace {

using namespace mekler;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Natural parse_natural(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw InvalidArgument("not a natural number: '" + s + "'");
  return static_cast<Natural>(v);
}

std::set<Natural> parse_naturals(const std::string& s) {
  std::set<Natural> out;
  for (const auto& t : split(s, ',')) out.insert(parse_natural(t));
  return out;
}

// "0-1,1-2"; the empty string is the empty set.
std::set<NaturalPair> parse_pairs(const std::string& s) {
  std::set<NaturalPair> out;
  for (const auto& t : split(s, ',')) {
    const auto ends = split(t, '-');
    if (ends.size() != 2) throw InvalidArgument("pair must look like a-b: '" + t + "'");
    const Natural a = parse_natural(ends[0]);
    const Natural b = parse_natural(ends[1]);
    if (a == b) throw InvalidArgument("pair has equal ends: '" + t + "'");
    out.insert(NaturalPair::of(a, b));
  }
  return out;
}

struct Options {
  std::uint32_t p = 3;
  std::vector<std::uint32_t> extra_primes;
  std::uint64_t seed = 1;
  std::string naturals = "0,1,2,3";
  std::string gadget_pairs;
  bool gadget_pairs_given = false;
  std::string r_edges = "0-1,1-2";
  std::size_t aux = kRequiredPartners;
  std::size_t budget_sample = 2;
  std::size_t budget_support = 3;
  std::size_t budget_recovery = 2;
  std::uint64_t budget_oracle = kDefaultOracleBudget;
  std::size_t budget_cover = kDefaultCoverCap;
  std::size_t samples = 10000;
  std::string format = "text";
  std::string out;

  RunConfig config() const {
    RunConfig c;
    c.p = p;
    c.extra_primes = extra_primes;
    c.seed = seed;
    c.naturals = parse_naturals(naturals);
    if (gadget_pairs_given) c.gadget_pairs = parse_pairs(gadget_pairs);
    c.r_edges = parse_pairs(r_edges);
    c.auxiliary_naturals = aux;
    c.sample_budget = budget_sample;
    c.support_budget = budget_support;
    c.recovery_support = budget_recovery;
    c.oracle_budget = budget_oracle;
    c.cover_cap = budget_cover;
    c.random_samples = samples;
    return c;
  }
};

int emit(const CommandResult& r, const Options& o) {
  const std::string text = o.format == "structured" ? r.report.to_json() + "\n" : r.report.to_text();
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return kExitConfig;
    }
    f << text;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mekler group verification runs"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", o.out, "Write the report to this file");
  };
  auto add_fragment = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Odd prime");
    sub->add_option("--seed", o.seed, "Seed for the randomized suites");
    sub->add_option("--naturals", o.naturals, "Comma-separated naturals");
    sub->add_option("--gadget-pairs", o.gadget_pairs, "Gadgeted pairs a-b,... (default: all)")
        ->each([&](const std::string&) { o.gadget_pairs_given = true; });
    sub->add_option("--r", o.r_edges, "Edge set R as a-b,...");
  };
  auto add_budgets = [&](CLI::App* sub) {
    sub->add_option("--extra-p", o.extra_primes, "Further primes for the suites");
    sub->add_option("--aux", o.aux, "Auxiliary naturals in the adequate fragment");
    sub->add_option("--budget-sample", o.budget_sample, "Random central translates per grid point");
    sub->add_option("--budget-support", o.budget_support, "Largest support in the exhaustive scans");
    sub->add_option("--budget-recovery", o.budget_recovery, "Largest support scanned by Down recovery");
    sub->add_option("--budget-oracle", o.budget_oracle, "Largest coset count for the brute-force oracle");
    sub->add_option("--budget-cover", o.budget_cover, "Largest set size for exact covering numbers");
    sub->add_option("--budget-samples", o.samples, "Random samples per law");
  };

  std::string graph_file;
  auto* nice = app.add_subcommand("nice", "Check a graph document for niceness");
  nice->add_option("graph", graph_file, "Graph document (JSON)")->required();
  add_output(nice);

  auto* fragment = app.add_subcommand("fragment", "Describe an A-fragment");
  add_fragment(fragment);
  add_output(fragment);

  auto* verify = app.add_subcommand("verify-lemmas", "Run every invariant suite");
  add_fragment(verify);
  add_budgets(verify);
  add_output(verify);

  std::string pipeline = "both";
  auto* roundtrip = app.add_subcommand("roundtrip", "Recover a graph on naturals from its group");
  roundtrip->add_option("graph", graph_file, "Graph document (JSON)")->required();
  roundtrip->add_option("--pipeline", pipeline, "up, down or both")->check(CLI::IsMember({"up", "down", "both"}));
  roundtrip->add_option("--p", o.p, "Odd prime (overridden by the document)");
  roundtrip->add_option("--seed", o.seed, "Seed for sampled translates");
  add_budgets(roundtrip);
  add_output(roundtrip);

  std::vector<std::string> elements;
  auto* ext = app.add_subcommand("ext-check", "Check the index-2 extension");
  ext->add_option("elements", elements, "Elements \"(<element>, 0|1)\" to test");
  add_fragment(ext);
  add_budgets(ext);
  add_output(ext);

  std::vector<std::string> groups;
  std::int64_t n = 2;
  std::size_t m = 1;
  auto* qprobe = app.add_subcommand("qprobe", "Probe root sets and covering numbers of finite groups");
  qprobe->add_option("--group", groups,
                     "sl2:q, cyclic:n, symmetric:n, perms:FILE, table:FILE or mekler (repeatable)");
  qprobe->add_option("--n", n, "Exponent");
  qprobe->add_option("--m", m, "Root-count bound");
  add_fragment(qprobe);
  add_budgets(qprobe);
  add_output(qprobe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  CommandResult r;
  if (*nice) {
    r = guarded("nice", [&] { return cmd_nice(read_graph_document(graph_file)); });
  } else if (*fragment) {
    r = guarded("fragment", [&] { return cmd_fragment(o.config()); });
  } else if (*verify) {
    r = guarded("verify-lemmas", [&] { return cmd_verify_lemmas(o.config()); });
  } else if (*roundtrip) {
    r = guarded("roundtrip", [&] { return cmd_roundtrip(read_graph_document(graph_file), pipeline, o.config()); });
  } else if (*ext) {
    r = guarded("ext-check", [&] { return cmd_ext_check(o.config(), elements); });
  } else {
    r = guarded("qprobe", [&] { return cmd_qprobe(groups, n, m, o.config()); });
  }
  return emit(r, o);
}
