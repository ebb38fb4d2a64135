#include "mekler/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace mekler {

bool Section::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool Report::all_pass() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.all_pass(); });
}

std::size_t Report::num_checks() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.checks.size();
  return n;
}

std::size_t Report::num_failures() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += std::count_if(s.checks.begin(), s.checks.end(), [](const Check& c) { return !c.pass; });
  return n;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "== " << command << " ==\n";
  for (const auto& [k, v] : header) out << k << ": " << v << "\n";
  for (const auto& s : sections) {
    out << "\n[" << s.title << "]\n";
    for (const auto& [k, v] : s.facts) out << "  " << k << " = " << v << "\n";
    for (const auto& c : s.checks) {
      out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
      const std::size_t shown = std::min(c.counterexamples.size(), kMaxCounterexamples);
      for (std::size_t i = 0; i < shown; ++i) out << "        counterexample: " << c.counterexamples[i] << "\n";
      if (c.counterexamples.size() > shown) {
        out << "        ... " << c.counterexamples.size() - shown << " more\n";
      }
    }
    for (const auto& n : s.notes) out << "  note: " << n << "\n";
  }
  out << "\nverdict: " << (all_pass() ? "PASS" : "FAIL") << " (" << num_checks() - num_failures() << "/"
      << num_checks() << " checks passed)\n";
  return out.str();
}

std::string Report::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["command"] = command;
  ordered_json hdr = ordered_json::object();
  for (const auto& [k, v] : header) hdr[k] = v;
  j["header"] = hdr;
  ordered_json secs = ordered_json::array();
  for (const auto& s : sections) {
    ordered_json js;
    js["title"] = s.title;
    ordered_json facts = ordered_json::object();
    for (const auto& [k, v] : s.facts) facts[k] = v;
    js["facts"] = facts;
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
      ordered_json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["detail"] = c.detail;
      const std::size_t shown = std::min(c.counterexamples.size(), kMaxCounterexamples);
      jc["counterexamples"] = std::vector<std::string>(c.counterexamples.begin(), c.counterexamples.begin() + shown);
      jc["counterexamples_total"] = c.counterexamples.size();
      checks.push_back(jc);
    }
    js["checks"] = checks;
    js["notes"] = s.notes;
    secs.push_back(js);
  }
  j["sections"] = secs;
  j["verdict"] = all_pass() ? "PASS" : "FAIL";
  j["checks_total"] = num_checks();
  j["checks_failed"] = num_failures();
  return j.dump(2) + "\n";
}

}  // namespace mekler
