// Exercises the C interface through the shared library only. Nothing here
// may touch the C++ headers: whatever a foreign-language binding can reach
// is all these tests are allowed to reach.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "invprob.h"

namespace {

// Owned C string, so tests read naturally.
std::string take(char* buf) {
  REQUIRE(buf != nullptr);
  std::string s(buf);
  ip_buffer_free(buf);
  return s;
}

constexpr const char* kTinyScenario = R"({
  "name": "tiny",
  "space": {"explicit": [0, 1, 2, 3]},
  "generators": [{"permutation": [[0, 1], [1, 2], [2, 3], [3, 0]]}],
  "checks": [
    {"check": "orbit-closure", "start": 0, "expect": "finite:4"},
    {"check": "gamma", "a": "finite:[5]", "b": "finite:[5,9]"}
  ]
})";

}  // namespace

TEST_CASE("a JSON scenario runs and exposes its checks") {
  ip_report* rep = nullptr;
  REQUIRE(ip_run_scenario_json(kTinyScenario, 1, 0, 0, &rep) == IP_OK);
  REQUIRE(rep != nullptr);
  CHECK(ip_report_ok(rep, 0) == 1);
  CHECK(ip_report_ok(rep, 1) == 1);
  REQUIRE(ip_report_check_count(rep) == 2);

  char* buf = nullptr;
  REQUIRE(ip_report_check_name(rep, 0, &buf) == IP_OK);
  CHECK(take(buf) == "orbit-closure");
  REQUIRE(ip_report_check_outcome(rep, 0, &buf) == IP_OK);
  CHECK(take(buf) == "pass");
  REQUIRE(ip_report_check_value(rep, 0, &buf) == IP_OK);
  CHECK(take(buf) == "finite:4");
  REQUIRE(ip_report_check_outcome(rep, 1, &buf) == IP_OK);
  CHECK(take(buf) == "info");
  REQUIRE(ip_report_check_value(rep, 1, &buf) == IP_OK);
  CHECK(take(buf) == "1/2");

  REQUIRE(ip_report_text(rep, &buf) == IP_OK);
  std::string text = take(buf);
  CHECK(text.find("== tiny (seed 1) ==") != std::string::npos);
  CHECK(text.find("[pass] orbit-closure: finite:4") != std::string::npos);
  REQUIRE(ip_report_json(rep, &buf) == IP_OK);
  std::string json = take(buf);
  CHECK(json.find("\"title\": \"tiny\"") != std::string::npos);
  CHECK(json.find("\"ok\": true") != std::string::npos);
  ip_report_free(rep);
}

TEST_CASE("strict mode distinguishes undetermined measurements") {
  const char* undet = R"({
    "name": "u", "space": "integers", "generators": [],
    "checks": [{"check": "gamma",
                "a": "sparse:double-exp", "b": "sparse:squares"}]
  })";
  ip_report* rep = nullptr;
  REQUIRE(ip_run_scenario_json(undet, 1, 0, 0, &rep) == IP_OK);
  CHECK(ip_report_ok(rep, 0) == 1);
  CHECK(ip_report_ok(rep, 1) == 0);
  ip_report_free(rep);
}

TEST_CASE("budget overrides flow through to the closure checks") {
  const char* sc = R"({
    "name": "b", "space": "integers", "generators": [{"translate": 1}],
    "checks": [{"check": "orbit-closure", "start": 0,
                "expect": "budget-exceeded"}]
  })";
  ip_report* rep = nullptr;
  REQUIRE(ip_run_scenario_json(sc, 1, 1, 17, &rep) == IP_OK);
  CHECK(ip_report_ok(rep, 0) == 1);
  ip_report_free(rep);
}

TEST_CASE("named and file-backed scenarios run identically") {
  ip_report* by_name = nullptr;
  REQUIRE(ip_run_scenario_named("finite-space", 1, 0, 0, &by_name) == IP_OK);
  CHECK(ip_report_ok(by_name, 1) == 1);
  CHECK(ip_report_check_count(by_name) == 9);

  ip_report* by_file = nullptr;
  std::string path = std::string(SCENARIOS_DIR) + "/finite-space.json";
  REQUIRE(ip_run_scenario_file(path.c_str(), 1, 0, 0, &by_file) == IP_OK);
  char *a = nullptr, *b = nullptr;
  REQUIRE(ip_report_text(by_name, &a) == IP_OK);
  REQUIRE(ip_report_text(by_file, &b) == IP_OK);
  CHECK(take(a) == take(b));
  ip_report_free(by_name);
  ip_report_free(by_file);
}

TEST_CASE("failures come back as status codes with a thread-local message") {
  ip_report* rep = nullptr;
  CHECK(ip_run_scenario_file("/no/such/file.json", 1, 0, 0, &rep) ==
        IP_ERR_IO);
  CHECK(rep == nullptr);
  CHECK(std::strlen(ip_last_error()) > 0);

  CHECK(ip_run_scenario_json("{broken", 1, 0, 0, &rep) == IP_ERR_PARSE);
  const char* unknown = R"({"name":"x","space":"integers","generators":[],
                            "checks":[{"check":"no-such"}]})";
  CHECK(ip_run_scenario_json(unknown, 1, 0, 0, &rep) == IP_ERR_UNKNOWN_CHECK);
  CHECK(ip_run_scenario_named("no-such-bundle", 1, 0, 0, &rep) ==
        IP_ERR_INVALID_ARGUMENT);

  CHECK(ip_run_scenario_json(nullptr, 1, 0, 0, &rep) ==
        IP_ERR_INVALID_ARGUMENT);
  CHECK(ip_run_scenario_json(kTinyScenario, 1, 0, 0, nullptr) ==
        IP_ERR_INVALID_ARGUMENT);
  CHECK(ip_report_check_count(nullptr) == -1);
  char* buf = nullptr;
  CHECK(ip_report_text(nullptr, &buf) == IP_ERR_BAD_HANDLE);

  // success clears the sticky message
  REQUIRE(ip_run_scenario_json(kTinyScenario, 1, 0, 0, &rep) == IP_OK);
  CHECK(std::strlen(ip_last_error()) == 0);
  ip_report_free(rep);
}

TEST_CASE("per-check access is bounds-checked") {
  ip_report* rep = nullptr;
  REQUIRE(ip_run_scenario_json(kTinyScenario, 1, 0, 0, &rep) == IP_OK);
  char* buf = nullptr;
  CHECK(ip_report_check_name(rep, 99, &buf) == IP_ERR_INVALID_ARGUMENT);
  ip_report_free(rep);
}

TEST_CASE("the bundled gallery is reachable through the C surface") {
  char* buf = nullptr;
  REQUIRE(ip_bundled_names(&buf) == IP_OK);
  std::string names = take(buf);
  CHECK(names.find("finite-space") != std::string::npos);
  CHECK(names.find("coin-shift-paradox") != std::string::npos);
  CHECK(std::count(names.begin(), names.end(), '\n') == 4);

  REQUIRE(ip_bundled_text("coin-reversals", &buf) == IP_OK);
  CHECK(take(buf).find("\"name\": \"coin-reversals\"") != std::string::npos);
  CHECK(ip_bundled_text("nope", &buf) == IP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("the existence catalog runs clean end to end") {
  ip_report* rep = nullptr;
  REQUIRE(ip_run_table(3, &rep) == IP_OK);
  CHECK(ip_report_ok(rep, 1) == 1);
  CHECK(ip_report_check_count(rep) == 45);
  char* buf = nullptr;
  REQUIRE(ip_report_json(rep, &buf) == IP_OK);
  std::string json = take(buf);
  CHECK(json.find("\"outcome\": \"cited\"") != std::string::npos);
  ip_report_free(rep);
}

TEST_CASE("free functions tolerate null") {
  ip_report_free(nullptr);
  ip_buffer_free(nullptr);
  CHECK(true);
}
