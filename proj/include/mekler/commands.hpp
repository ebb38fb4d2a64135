#pragma once

// The verification runs behind the command-line tool. Each command returns
// a report and an exit code: 0 pass, 1 verification failure, 2
// configuration or adequacy error.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mekler/appendix_q.hpp"
#include "mekler/graph_io.hpp"
#include "mekler/interpretation.hpp"
#include "mekler/report.hpp"

namespace mekler {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

struct RunConfig {
  std::uint32_t p = 3;
  // Further primes for the group-law, relation, extension and formula suites.
  std::vector<std::uint32_t> extra_primes;
  std::uint64_t seed = 1;
  std::set<Natural> naturals{0, 1, 2, 3};
  std::optional<std::set<NaturalPair>> gadget_pairs;  // all pairs when absent
  std::set<NaturalPair> r_edges{NaturalPair::of(0, 1), NaturalPair::of(1, 2)};
  std::size_t auxiliary_naturals = kRequiredPartners;
  std::size_t sample_budget = 2;
  std::size_t support_budget = 3;
  // Down recovery: largest support of the scanned H_R cosets.
  std::size_t recovery_support = 2;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  std::size_t cover_cap = kDefaultCoverCap;
  std::size_t random_samples = 10000;

  std::set<NaturalPair> effective_gadget_pairs() const;
  // Throws InvalidArgument on an even or composite prime, zero budgets, or
  // R / gadget pairs outside the naturals.
  void validate() const;
  std::vector<std::pair<std::string, std::string>> header() const;
};

struct CommandResult {
  Report report;
  int exit_code = kExitPass;
};

CommandResult cmd_nice(const GraphDocument& doc);
CommandResult cmd_fragment(const RunConfig& config);
CommandResult cmd_verify_lemmas(const RunConfig& config);
CommandResult cmd_roundtrip(const GraphDocument& doc, const std::string& pipeline, const RunConfig& config);
CommandResult cmd_ext_check(const RunConfig& config, const std::vector<std::string>& elements);
CommandResult cmd_qprobe(const std::vector<std::string>& group_specs, std::int64_t n, std::size_t m,
                         const RunConfig& config);

// "sl2:q", "cyclic:n", "symmetric:n", "perms:FILE", "table:FILE", "mekler"
// (the Mekler group of the configured fragment, which must be tiny).
NamedGroup load_group(const std::string& spec, const RunConfig& config);

// Runs fn, turning configuration and adequacy errors into an exit-2 report.
template <class Fn>
CommandResult guarded(const std::string& command, Fn&& fn);

CommandResult config_error(const std::string& command, const std::string& message, const std::string& hint = {});

template <class Fn>
CommandResult guarded(const std::string& command, Fn&& fn) {
  try {
    return fn();
  } catch (const InadequateFragment& e) {
    return config_error(command, e.what(),
                        "gadget every pair of tested naturals and provide at least " +
                            std::to_string(kRequiredPartners) + " gadgeted partners per natural");
  } catch (const BudgetExceeded& e) {
    return config_error(command, e.what(), "raise --budget-oracle or use a smaller fragment");
  } catch (const InternalError& e) {
    CommandResult r = config_error(command, e.what());
    r.exit_code = kExitFailure;
    return r;
  } catch (const Error& e) {
    return config_error(command, e.what());
  }
}

}  // namespace mekler
