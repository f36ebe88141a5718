#include "invprob/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace invprob {

const char* outcome_str(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Undetermined: return "undetermined";
    case Outcome::Info: return "info";
    case Outcome::Cited: return "cited";
    case Outcome::Error: return "error";
  }
  return "?";
}

CheckResult& Report::add(CheckResult r) {
  checks.push_back(std::move(r));
  return checks.back();
}

std::size_t Report::count(Outcome o) const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.outcome == o) ++n;
  return n;
}

bool Report::ok(bool strict) const {
  for (const auto& c : checks) {
    if (c.outcome == Outcome::Fail || c.outcome == Outcome::Error) return false;
    if (strict && c.outcome == Outcome::Undetermined) return false;
    if (!c.expected_match) return false;
  }
  return true;
}

std::string Report::text() const {
  std::ostringstream out;
  out << "== " << (title.empty() ? "report" : title);
  if (has_seed) out << " (seed " << seed << ")";
  out << " ==\n";
  for (const auto& c : checks) {
    out << "[" << outcome_str(c.outcome) << "] " << c.name;
    if (!c.value.empty()) out << ": " << c.value;
    if (!c.expected.empty())
      out << (c.expected_match ? " (matches expected " : " (EXPECTED ")
          << c.expected << ")";
    if (!c.detail.empty()) out << " -- " << c.detail;
    if (!c.citation.empty()) out << " [" << c.citation << "]";
    out << "\n";
  }
  out << "-- " << checks.size() << " checks: " << count(Outcome::Pass)
      << " pass, " << count(Outcome::Fail) << " fail, "
      << count(Outcome::Undetermined) << " undetermined, "
      << count(Outcome::Info) << " info, " << count(Outcome::Cited)
      << " cited, " << count(Outcome::Error) << " error; overall "
      << (ok() ? "OK" : "NOT OK") << " --\n";
  return out.str();
}

std::string Report::json() const {
  nlohmann::json j;
  j["title"] = title;
  if (has_seed) j["seed"] = seed;
  j["ok"] = ok();
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["outcome"] = outcome_str(c.outcome);
    if (!c.value.empty()) e["value"] = c.value;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.expected.empty()) {
      e["expected"] = c.expected;
      e["expected_match"] = c.expected_match;
    }
    if (!c.citation.empty()) e["citation"] = c.citation;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace invprob
