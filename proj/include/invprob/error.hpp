#pragma once

#include <stdexcept>
#include <string>

namespace invprob {

enum class Errc {
  invalid_argument,
  variant_mismatch,
  parse_error,
  unsupported_shape,
  truncation_too_shallow,
  closure_budget_exceeded,
  repeated_point,
  no_move_fits,
  invalid_rate,
  empty_target,
  unknown_check,
  io_error,
  internal,
};

const char* errc_name(Errc c);

// Single exception type for the whole core; the C boundary maps `code` to
// status values and carries `what()` through the session's last-error slot.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace invprob
