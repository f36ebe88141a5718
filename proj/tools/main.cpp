// invprob: construct and verify invariant non-classical probabilities over
// partial group actions. Every subcommand assembles a one-check scenario and
// hands it to the shared library; `scenario run` and `table` execute complete
// scenario files and the existence catalog.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "invprob.h"

namespace {

using Json = nlohmann::json;

struct Options {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  std::string format = "text";
  bool strict = false;
  std::string out;
};

// Accept raw JSON; fall back to treating the argument as a plain string so
// `--space integers` and `--A finite:[5]` work without extra quoting.
Json parse_arg(const std::string& s) {
  Json j = Json::parse(s, nullptr, false);
  if (j.is_discarded()) return Json(s);
  return j;
}

int hard_error() {
  std::cerr << "error: " << ip_last_error() << "\n";
  return 2;
}

int emit_report(ip_report* rep, const Options& opt, bool bare) {
  char* buf = nullptr;
  ip_status st;
  if (opt.format == "json")
    st = ip_report_json(rep, &buf);
  else if (bare)
    st = ip_report_check_value(rep, 0, &buf);
  else
    st = ip_report_text(rep, &buf);
  if (st != IP_OK) {
    ip_report_free(rep);
    return hard_error();
  }
  std::string text(buf);
  ip_buffer_free(buf);
  if (bare && opt.format != "json") text += "\n";

  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      ip_report_free(rep);
      return 2;
    }
    f << text;
  }
  int ok = ip_report_ok(rep, opt.strict ? 1 : 0);
  ip_report_free(rep);
  return ok ? 0 : 1;
}

int run_envelope(const Json& envelope, const Options& opt, bool bare = false) {
  std::string text = envelope.dump();
  ip_report* rep = nullptr;
  ip_status st =
      ip_run_scenario_json(text.c_str(), opt.seed, opt.budget.has_value(),
                           opt.budget.value_or(0), &rep);
  if (st != IP_OK) return hard_error();
  return emit_report(rep, opt, bare);
}

// One-check scenario around the shared space/generator flags.
struct EnvelopeArgs {
  std::string space = "integers";
  std::string gens = "[]";
};

Json envelope(const std::string& name, const EnvelopeArgs& ea, Json check) {
  Json sc;
  sc["name"] = name;
  sc["space"] = parse_arg(ea.space);
  sc["generators"] = parse_arg(ea.gens);
  check["check"] = name;
  sc["checks"] = Json::array({std::move(check)});
  return sc;
}

void add_common(CLI::App* cmd, EnvelopeArgs& ea) {
  cmd->add_option("--space", ea.space,
                  "space as JSON, or the words integers/all");
  cmd->add_option("--gens", ea.gens, "generator list as JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact constructions and verifications of invariant conditional, "
      "qualitative, and stage-net probabilities over partial group actions"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "seed for sampled verification sweeps");
  app.add_option("--budget", opt.budget, "closure budget override");
  app.add_option("--format", opt.format, "report rendering")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", opt.strict,
               "treat undetermined outcomes as failures");
  app.add_option("--out", opt.out, "write the report to a file");

  int rc = 0;

  // orbit
  {
    auto* cmd = app.add_subcommand("orbit", "orbit closure of a point");
    auto ea = std::make_shared<EnvelopeArgs>();
    auto start = std::make_shared<std::string>();
    auto moves = std::make_shared<std::string>();
    add_common(cmd, *ea);
    cmd->add_option("--start", *start, "starting point")->required();
    cmd->add_option("--moves", *moves, "move words as JSON");
    cmd->callback([&rc, &opt, ea, start, moves] {
      Json check;
      check["start"] = parse_arg(*start);
      if (!moves->empty()) check["moves"] = parse_arg(*moves);
      rc = run_envelope(envelope("orbit-closure", *ea, std::move(check)), opt);
    });
  }

  // localfinite
  {
    auto* cmd = app.add_subcommand(
        "localfinite", "finiteness of every sampled orbit closure");
    auto ea = std::make_shared<EnvelopeArgs>();
    auto starts = std::make_shared<std::string>();
    add_common(cmd, *ea);
    cmd->add_option("--starts", *starts, "starting points as a JSON array");
    cmd->callback([&rc, &opt, ea, starts] {
      Json check = Json::object();
      if (!starts->empty()) check["starts"] = parse_arg(*starts);
      Json env = envelope("localfinite", *ea, std::move(check));
      rc = run_envelope(env, opt);
    });
  }

  // equidecomp
  {
    auto* cmd = app.add_subcommand(
        "equidecomp", "piecewise matching witness between two finite sets");
    auto ea = std::make_shared<EnvelopeArgs>();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto moves = std::make_shared<std::string>();
    add_common(cmd, *ea);
    cmd->add_option("--a", *a, "source set as a JSON array")->required();
    cmd->add_option("--b", *b, "target set as a JSON array")->required();
    cmd->add_option("--moves", *moves, "move words as JSON");
    cmd->callback([&rc, &opt, ea, a, b, moves] {
      Json check;
      check["a"] = parse_arg(*a);
      check["b"] = parse_arg(*b);
      if (!moves->empty()) check["moves"] = parse_arg(*moves);
      rc = run_envelope(envelope("equidecomp", *ea, std::move(check)), opt);
    });
  }

  // popper build | verify
  {
    auto* popper = app.add_subcommand(
        "popper", "level-stack conditional probability tables");
    popper->require_subcommand(1);
    for (const char* which : {"build", "verify"}) {
      auto* cmd = popper->add_subcommand(
          which, std::string(which) == "build"
                     ? "construct the stack and report its conditionals"
                     : "verify laws, invariance, and the exchange round trip");
      auto ea = std::make_shared<EnvelopeArgs>();
      auto partition = std::make_shared<std::string>();
      add_common(cmd, *ea);
      cmd->add_option("--partition", *partition,
                      "algebra atoms as a JSON array of point arrays");
      bool build = std::string(which) == "build";
      cmd->callback([&rc, &opt, ea, partition, build] {
        Json check = Json::object();
        if (!partition->empty()) check["partition"] = parse_arg(*partition);
        rc = run_envelope(
            envelope(build ? "popper-build" : "popper-verify", *ea,
                     std::move(check)),
            opt);
      });
    }
  }

  // qual verify | compare
  {
    auto* qual = app.add_subcommand("qual", "qualitative probability orders");
    qual->require_subcommand(1);

    auto add_oracle_opts = [](CLI::App* cmd, auto oracle, auto family,
                              auto translations) {
      cmd->add_option("--oracle", *oracle, "cone, lexmax, or popper");
      cmd->add_option("--family", *family,
                      "event family: JSON array of set literals or masks");
      cmd->add_option("--translations", *translations,
                      "translation amounts as a JSON array");
    };

    {
      auto* cmd = qual->add_subcommand("verify", "axioms over a family");
      auto ea = std::make_shared<EnvelopeArgs>();
      auto oracle = std::make_shared<std::string>("cone");
      auto family = std::make_shared<std::string>();
      auto translations = std::make_shared<std::string>();
      add_common(cmd, *ea);
      add_oracle_opts(cmd, oracle, family, translations);
      cmd->callback([&rc, &opt, ea, oracle, family, translations] {
        Json check;
        check["oracle"] = *oracle;
        if (!family->empty()) check["family"] = parse_arg(*family);
        if (!translations->empty())
          check["translations"] = parse_arg(*translations);
        rc = run_envelope(envelope("qual-axioms", *ea, std::move(check)), opt);
      });
    }
    {
      auto* cmd = qual->add_subcommand("compare", "compare two events");
      auto ea = std::make_shared<EnvelopeArgs>();
      auto oracle = std::make_shared<std::string>("cone");
      auto family = std::make_shared<std::string>();
      auto translations = std::make_shared<std::string>();
      auto a = std::make_shared<std::string>();
      auto b = std::make_shared<std::string>();
      add_common(cmd, *ea);
      add_oracle_opts(cmd, oracle, family, translations);
      cmd->add_option("--a", *a, "first event")->required();
      cmd->add_option("--b", *b, "second event")->required();
      cmd->callback([&rc, &opt, ea, oracle, a, b] {
        Json check;
        check["oracle"] = *oracle;
        check["a"] = parse_arg(*a);
        check["b"] = parse_arg(*b);
        rc = run_envelope(envelope("qual-compare", *ea, std::move(check)), opt,
                          /*bare=*/true);
      });
    }
  }

  // gamma
  {
    auto* cmd = app.add_subcommand(
        "gamma", "exact scaling threshold between two integer sets");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    cmd->add_option("--A", *a, "numerator set literal")->required();
    cmd->add_option("--B", *b, "denominator set literal")->required();
    cmd->callback([&rc, &opt, a, b] {
      Json check;
      check["a"] = *a;
      check["b"] = *b;
      rc = run_envelope(envelope("gamma", EnvelopeArgs{}, std::move(check)),
                        opt, /*bare=*/true);
    });
  }

  // skew
  {
    auto* cmd = app.add_subcommand(
        "skew", "conditional probability of one integer set given another");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    cmd->add_option("--A", *a, "event set literal")->required();
    cmd->add_option("--B", *b, "condition set literal")->required();
    cmd->callback([&rc, &opt, a, b] {
      Json check;
      check["a"] = *a;
      check["b"] = *b;
      rc = run_envelope(envelope("skew", EnvelopeArgs{}, std::move(check)),
                        opt, /*bare=*/true);
    });
  }

  // scenario run
  {
    auto* scenario = app.add_subcommand("scenario", "scenario files");
    scenario->require_subcommand(1);
    auto* cmd = scenario->add_subcommand(
        "run", "run a scenario file or a bundled scenario by name");
    auto target = std::make_shared<std::string>();
    cmd->add_option("target", *target, "path or bundled name")->required();
    cmd->callback([&rc, &opt, target] {
      ip_report* rep = nullptr;
      ip_status st;
      if (std::filesystem::exists(*target))
        st = ip_run_scenario_file(target->c_str(), opt.seed,
                                  opt.budget.has_value(),
                                  opt.budget.value_or(0), &rep);
      else
        st = ip_run_scenario_named(target->c_str(), opt.seed,
                                   opt.budget.has_value(),
                                   opt.budget.value_or(0), &rep);
      if (st != IP_OK) {
        rc = hard_error();
        char* names = nullptr;
        if (!std::filesystem::exists(*target) &&
            ip_bundled_names(&names) == IP_OK) {
          std::cerr << "bundled scenarios:\n" << names << "\n";
          ip_buffer_free(names);
        }
        return;
      }
      rc = emit_report(rep, opt, false);
    });
  }

  // table
  {
    auto* cmd = app.add_subcommand(
        "table", "existence catalog across spaces and symmetry sets");
    cmd->callback([&rc, &opt] {
      ip_report* rep = nullptr;
      if (ip_run_table(opt.seed, &rep) != IP_OK) {
        rc = hard_error();
        return;
      }
      rc = emit_report(rep, opt, false);
    });
  }

  CLI11_PARSE(app, argc, argv);
  return rc;
}
