/* C interface to the invariant-probability library.
 *
 * Every entry point returns an ip_status; results come back through out
 * parameters. Strings returned through char** are heap-allocated and must be
 * released with ip_buffer_free. Reports are opaque handles released with
 * ip_report_free. On any failure, ip_last_error() describes the most recent
 * error on the calling thread.
 */
#ifndef INVPROB_H
#define INVPROB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IP_API __declspec(dllexport)
#else
#define IP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ip_status {
  IP_OK = 0,
  IP_ERR_INVALID_ARGUMENT = 1,
  IP_ERR_VARIANT_MISMATCH = 2,
  IP_ERR_PARSE = 3,
  IP_ERR_UNSUPPORTED_SHAPE = 4,
  IP_ERR_TRUNCATION_TOO_SHALLOW = 5,
  IP_ERR_CLOSURE_BUDGET_EXCEEDED = 6,
  IP_ERR_REPEATED_POINT = 7,
  IP_ERR_NO_MOVE_FITS = 8,
  IP_ERR_INVALID_RATE = 9,
  IP_ERR_EMPTY_TARGET = 10,
  IP_ERR_UNKNOWN_CHECK = 11,
  IP_ERR_IO = 12,
  IP_ERR_INTERNAL = 13,
  IP_ERR_BAD_HANDLE = 14
} ip_status;

typedef struct ip_report ip_report;

/* Run a scenario given as JSON text / a file path / a bundled name.
 * `budget` overrides every closure budget in the scenario when
 * `has_budget` is nonzero. The report is produced even when individual
 * checks fail; a nonzero return means the scenario could not run at all. */
IP_API ip_status ip_run_scenario_json(const char* json_text, uint64_t seed,
                                      int has_budget, uint64_t budget,
                                      ip_report** out);
IP_API ip_status ip_run_scenario_file(const char* path, uint64_t seed,
                                      int has_budget, uint64_t budget,
                                      ip_report** out);
IP_API ip_status ip_run_scenario_named(const char* name, uint64_t seed,
                                       int has_budget, uint64_t budget,
                                       ip_report** out);

/* Run the full existence catalog. */
IP_API ip_status ip_run_table(uint64_t seed, ip_report** out);

/* 1 when no check failed (with `strict`, undetermined also fails), else 0. */
IP_API int ip_report_ok(const ip_report* rep, int strict);

/* Renderings and per-check access. Outcome strings are one of
 * "pass", "fail", "undetermined", "info", "cited", "error". */
IP_API ip_status ip_report_text(const ip_report* rep, char** out);
IP_API ip_status ip_report_json(const ip_report* rep, char** out);
IP_API long ip_report_check_count(const ip_report* rep);
IP_API ip_status ip_report_check_name(const ip_report* rep, size_t index,
                                      char** out);
IP_API ip_status ip_report_check_outcome(const ip_report* rep, size_t index,
                                         char** out);
IP_API ip_status ip_report_check_value(const ip_report* rep, size_t index,
                                       char** out);

/* Bundled scenarios: names joined by newlines, and the raw JSON text of one. */
IP_API ip_status ip_bundled_names(char** out);
IP_API ip_status ip_bundled_text(const char* name, char** out);

IP_API void ip_report_free(ip_report* rep);
IP_API void ip_buffer_free(char* buf);

/* Description of the last error on this thread; empty string if none. */
IP_API const char* ip_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* INVPROB_H */
