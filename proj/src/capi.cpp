#include "invprob.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "invprob/error.hpp"
#include "invprob/report.hpp"
#include "invprob/scenario.hpp"

struct ip_report {
  invprob::Report rep;
};

namespace {

thread_local std::string g_last_error;

ip_status status_of(invprob::Errc c) {
  using invprob::Errc;
  switch (c) {
    case Errc::invalid_argument: return IP_ERR_INVALID_ARGUMENT;
    case Errc::variant_mismatch: return IP_ERR_VARIANT_MISMATCH;
    case Errc::parse_error: return IP_ERR_PARSE;
    case Errc::unsupported_shape: return IP_ERR_UNSUPPORTED_SHAPE;
    case Errc::truncation_too_shallow: return IP_ERR_TRUNCATION_TOO_SHALLOW;
    case Errc::closure_budget_exceeded: return IP_ERR_CLOSURE_BUDGET_EXCEEDED;
    case Errc::repeated_point: return IP_ERR_REPEATED_POINT;
    case Errc::no_move_fits: return IP_ERR_NO_MOVE_FITS;
    case Errc::invalid_rate: return IP_ERR_INVALID_RATE;
    case Errc::empty_target: return IP_ERR_EMPTY_TARGET;
    case Errc::unknown_check: return IP_ERR_UNKNOWN_CHECK;
    case Errc::io_error: return IP_ERR_IO;
    case Errc::internal: return IP_ERR_INTERNAL;
  }
  return IP_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf) std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

ip_status fail_status(ip_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

template <typename Fn>
ip_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const invprob::Error& e) {
    return fail_status(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_status(IP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_status(IP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail_status(IP_ERR_INTERNAL, "unknown failure");
  }
}

ip_status emit(invprob::Report rep, ip_report** out) {
  *out = new ip_report{std::move(rep)};
  g_last_error.clear();
  return IP_OK;
}

std::optional<std::uint64_t> budget_arg(int has_budget, uint64_t budget) {
  if (has_budget) return budget;
  return std::nullopt;
}

ip_status string_out(const std::string& s, char** out) {
  *out = dup_string(s);
  if (!*out) return fail_status(IP_ERR_INTERNAL, "out of memory");
  g_last_error.clear();
  return IP_OK;
}

const invprob::CheckResult* check_at(const ip_report* rep, size_t index) {
  if (!rep || index >= rep->rep.checks.size()) return nullptr;
  return &rep->rep.checks[index];
}

}  // namespace

extern "C" {

ip_status ip_run_scenario_json(const char* json_text, uint64_t seed,
                               int has_budget, uint64_t budget,
                               ip_report** out) {
  if (!json_text || !out)
    return fail_status(IP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    invprob::Scenario sc = invprob::parse_scenario(json_text);
    return emit(invprob::run_scenario(sc, seed, budget_arg(has_budget, budget)),
                out);
  });
}

ip_status ip_run_scenario_file(const char* path, uint64_t seed, int has_budget,
                               uint64_t budget, ip_report** out) {
  if (!path || !out)
    return fail_status(IP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    invprob::Scenario sc = invprob::load_scenario_file(path);
    return emit(invprob::run_scenario(sc, seed, budget_arg(has_budget, budget)),
                out);
  });
}

ip_status ip_run_scenario_named(const char* name, uint64_t seed,
                                int has_budget, uint64_t budget,
                                ip_report** out) {
  if (!name || !out)
    return fail_status(IP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    invprob::Scenario sc = invprob::bundled_scenario(name);
    return emit(invprob::run_scenario(sc, seed, budget_arg(has_budget, budget)),
                out);
  });
}

ip_status ip_run_table(uint64_t seed, ip_report** out) {
  if (!out) return fail_status(IP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(invprob::run_table(seed), out); });
}

int ip_report_ok(const ip_report* rep, int strict) {
  if (!rep) return 0;
  return rep->rep.ok(strict != 0) ? 1 : 0;
}

ip_status ip_report_text(const ip_report* rep, char** out) {
  if (!rep || !out) return fail_status(IP_ERR_BAD_HANDLE, "null handle");
  return guarded([&] { return string_out(rep->rep.text(), out); });
}

ip_status ip_report_json(const ip_report* rep, char** out) {
  if (!rep || !out) return fail_status(IP_ERR_BAD_HANDLE, "null handle");
  return guarded([&] { return string_out(rep->rep.json(), out); });
}

long ip_report_check_count(const ip_report* rep) {
  if (!rep) return -1;
  return static_cast<long>(rep->rep.checks.size());
}

ip_status ip_report_check_name(const ip_report* rep, size_t index,
                               char** out) {
  if (!rep || !out) return fail_status(IP_ERR_BAD_HANDLE, "null report");
  const invprob::CheckResult* c = check_at(rep, index);
  if (!c) return fail_status(IP_ERR_INVALID_ARGUMENT, "check index out of range");
  return string_out(c->name, out);
}

ip_status ip_report_check_outcome(const ip_report* rep, size_t index,
                                  char** out) {
  if (!rep || !out) return fail_status(IP_ERR_BAD_HANDLE, "null report");
  const invprob::CheckResult* c = check_at(rep, index);
  if (!c) return fail_status(IP_ERR_INVALID_ARGUMENT, "check index out of range");
  return string_out(invprob::outcome_str(c->outcome), out);
}

ip_status ip_report_check_value(const ip_report* rep, size_t index,
                                char** out) {
  if (!rep || !out) return fail_status(IP_ERR_BAD_HANDLE, "null report");
  const invprob::CheckResult* c = check_at(rep, index);
  if (!c) return fail_status(IP_ERR_INVALID_ARGUMENT, "check index out of range");
  return string_out(c->value, out);
}

ip_status ip_bundled_names(char** out) {
  if (!out) return fail_status(IP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::string joined;
    for (const auto& n : invprob::bundled_scenario_names()) {
      if (!joined.empty()) joined += "\n";
      joined += n;
    }
    return string_out(joined, out);
  });
}

ip_status ip_bundled_text(const char* name, char** out) {
  if (!name || !out)
    return fail_status(IP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { return string_out(invprob::bundled_scenario_text(name), out); });
}

void ip_report_free(ip_report* rep) { delete rep; }

void ip_buffer_free(char* buf) { std::free(buf); }

const char* ip_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
