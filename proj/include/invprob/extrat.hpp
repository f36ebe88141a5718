#pragma once

#include <compare>
#include <optional>
#include <string>

#include "invprob/rat.hpp"

namespace invprob {

// Non-negative rational extended with +infinity. Addition is total;
// multiplication and division are partial: 0 * inf and 0/0 have no value and
// come back as nullopt so callers must handle them explicitly. x/0 = inf for
// x != 0, x/inf = 0 for finite x, inf/inf is undefined.
class ExtRat {
 public:
  ExtRat() : inf_(false), v_(0) {}
  explicit ExtRat(const Rat& v);
  static ExtRat infinity() {
    ExtRat e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  bool is_zero() const { return !inf_ && v_ == 0; }
  const Rat& finite_value() const;  // throws on infinity

  ExtRat operator+(const ExtRat& o) const;
  bool operator==(const ExtRat& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator<(const ExtRat& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

 private:
  bool inf_;
  Rat v_;
};

std::optional<ExtRat> mul(const ExtRat& a, const ExtRat& b);
std::optional<ExtRat> div(const ExtRat& a, const ExtRat& b);

// Parses "inf" or a rational literal; rejects negatives.
ExtRat parse_extrat(const std::string& s);

}  // namespace invprob
