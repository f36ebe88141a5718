#include <cctype>

#include "invprob/error.hpp"
#include "invprob/extrat.hpp"
#include "invprob/rat.hpp"

namespace invprob {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::variant_mismatch: return "variant-mismatch";
    case Errc::parse_error: return "parse-error";
    case Errc::unsupported_shape: return "unsupported-shape";
    case Errc::truncation_too_shallow: return "truncation-too-shallow";
    case Errc::closure_budget_exceeded: return "closure-budget-exceeded";
    case Errc::repeated_point: return "repeated-point";
    case Errc::no_move_fits: return "no-move-fits";
    case Errc::invalid_rate: return "invalid-rate";
    case Errc::empty_target: return "empty-target";
    case Errc::unknown_check: return "unknown-check";
    case Errc::io_error: return "io-error";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Errc::parse_error, "empty rational literal");
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '-' || s[i] == '+') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) fail(Errc::parse_error, "bad rational literal: " + s);
  if (num_end == s.size()) return Rat(s);
  if (s[num_end] != '/') fail(Errc::parse_error, "bad rational literal: " + s);
  std::size_t den_end = digits(num_end + 1);
  if (den_end != s.size() || den_end == num_end + 1)
    fail(Errc::parse_error, "bad rational literal: " + s);
  BigInt den(s.substr(num_end + 1));
  if (den == 0) fail(Errc::parse_error, "zero denominator: " + s);
  return Rat(BigInt(s.substr(0, num_end)), den);
}

ExtRat::ExtRat(const Rat& v) : inf_(false), v_(v) {
  if (v < 0) fail(Errc::invalid_argument, "negative extended rational");
}

const Rat& ExtRat::finite_value() const {
  if (inf_) fail(Errc::invalid_argument, "finite_value of infinity");
  return v_;
}

ExtRat ExtRat::operator+(const ExtRat& o) const {
  if (inf_ || o.inf_) return infinity();
  return ExtRat(v_ + o.v_);
}

std::optional<ExtRat> mul(const ExtRat& a, const ExtRat& b) {
  if (a.is_inf() || b.is_inf()) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;  // 0 * inf
    return ExtRat::infinity();
  }
  return ExtRat(a.finite_value() * b.finite_value());
}

std::optional<ExtRat> div(const ExtRat& a, const ExtRat& b) {
  if (a.is_inf() && b.is_inf()) return std::nullopt;
  if (b.is_inf()) return ExtRat(Rat(0));
  if (b.is_zero()) {
    if (a.is_zero()) return std::nullopt;  // 0/0
    return ExtRat::infinity();             // x/0 = inf, x != 0
  }
  if (a.is_inf()) return ExtRat::infinity();
  return ExtRat(a.finite_value() / b.finite_value());
}

ExtRat parse_extrat(const std::string& s) {
  if (s == "inf") return ExtRat::infinity();
  return ExtRat(parse_rat(s));
}

}  // namespace invprob
