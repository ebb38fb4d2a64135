#pragma once

// Structured run reports, rendered as aligned text or as JSON. Rendering is
// deterministic: no clocks, no hash-ordered containers.

#include <string>
#include <utility>
#include <vector>

namespace mekler {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::string> counterexamples;
};

struct Section {
  std::string title;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  Check& check(std::string name, bool pass, std::string detail = {}) {
    checks.push_back(Check{std::move(name), pass, std::move(detail), {}});
    return checks.back();
  }
  bool all_pass() const;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<Section> sections;

  Section& section(std::string title) {
    sections.push_back(Section{std::move(title), {}, {}, {}});
    return sections.back();
  }
  bool all_pass() const;
  std::size_t num_checks() const;
  std::size_t num_failures() const;

  std::string to_text() const;
  std::string to_json() const;
};

// Counterexample lists are truncated to this many entries when rendered.
inline constexpr std::size_t kMaxCounterexamples = 10;

}  // namespace mekler
