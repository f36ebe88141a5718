#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invprob/equidecomp.hpp"
#include "invprob/generator.hpp"
#include "invprob/report.hpp"
#include "invprob/space.hpp"

namespace invprob {

// One named check invocation. Parameters stay as a JSON-object string so
// only the implementation file depends on the JSON library.
struct CheckSpec {
  std::string check;
  std::string label;        // display name; defaults to the check name
  std::string params_json;  // "{}" when absent
  std::string expect;       // pinned expected value ("" = measurement only)
  std::string cite;         // citation string for `cited` entries
};

struct Scenario {
  std::string name;
  SpaceSpec space;
  std::vector<Generator> generators;
  std::vector<CheckSpec> checks;
};

// Throws parse_error on malformed input, unknown_check when a check name is
// not in the registry.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

// Executes checks in order. A check with a pinned `expect` passes iff its
// computed value string equals the pin; an unpinned verifier check passes
// iff the verification holds; an unpinned measurement reports Info. When
// `budget_override` is set it replaces every per-check closure budget.
Report run_scenario(const Scenario& sc, std::uint64_t seed = 1,
                    std::optional<std::uint64_t> budget_override = {});

// Compiled-in example gallery (the same text ships under scenarios/).
std::vector<std::string> bundled_scenario_names();
const std::string& bundled_scenario_text(const std::string& name);
Scenario bundled_scenario(const std::string& name);

// Shift/flip paradox over two-sided coin sequences: E = all-heads from
// coordinate 2 on, split at coordinate 1 into A (heads there) and B (tails
// there); A shifts right onto E, B flips coordinate 1 and shifts right onto
// E. Generators are returned alongside. `corrupt` swaps the two words so the
// verification must fail.
struct CoinShiftParadox {
  ParadoxWitness witness;
  std::vector<Generator> gens;
};
CoinShiftParadox coin_shift_paradox(long long depth, bool corrupt = false);

// Existence catalog: one row per (space, symmetry group) case with three
// cells (full conditional / stage-net / qualitative). Machine-checkable
// cells re-verify their evidence; the rest carry literature citations.
Report run_table(std::uint64_t seed = 1);

}  // namespace invprob
