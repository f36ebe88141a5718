#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace invprob {

// Outcome of a single named check.
//   Pass / Fail      the check ran and decided.
//   Undetermined     the underlying oracle could not decide; neither pass
//                    nor fail (strict mode treats it as a failure).
//   Info             measurement only (a value, a witness, a count).
//   Cited            verdict taken from the literature, not computed here;
//                    the citation field carries the anchor.
//   Error            the check could not run at all.
enum class Outcome { Pass, Fail, Undetermined, Info, Cited, Error };

const char* outcome_str(Outcome o);

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::Info;
  std::string value;     // exact result rendered as text ("1/2", "Less", ...)
  std::string detail;    // witness, sweep record, or failure explanation
  std::string expected;  // pinned expectation, when the scenario carries one
  bool expected_match = true;
  std::string citation;  // literature anchor for Cited outcomes
};

struct Report {
  std::string title;
  bool has_seed = false;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  CheckResult& add(CheckResult r);
  std::size_t count(Outcome o) const;

  // True when no check failed or errored and every pinned expectation
  // matched. Undetermined checks only block under strict.
  bool ok(bool strict = false) const;

  std::string text() const;
  std::string json() const;
};

}  // namespace invprob
