#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "invprob/rat.hpp"

namespace invprob {

// p + q * sqrt(2)/4 with rational p and integer q. Comparisons against
// rationals and other Quad values are decided exactly by isolating the
// radical part and squaring (sqrt(2) is irrational, so equality forces the
// radical coefficients to match).
struct Quad {
  Rat p;
  long long q = 0;

  bool operator==(const Quad& o) const { return p == o.p && q == o.q; }
};

// -1 / 0 / +1 for numeric order of `a` against `b`.
int quad_cmp(const Quad& a, const Quad& b);
int quad_cmp_rat(const Quad& a, const Rat& b);
Quad quad_add(const Quad& a, const Quad& b);
std::string quad_str(const Quad& a);

// Sorted, duplicate-free set of flipped coordinates of a two-sided binary
// sequence (everything off the list is 0).
using Bits = std::vector<long long>;

class Point;
using Tuple = std::vector<Point>;

// Symbolic point of the ambient space: an integer, a quadratic number,
// a finite-support bit sequence over the integers, or a tuple of points.
// Quad values with q = 0 and integral p normalize to Int so numeric equality
// within the numeric kinds coincides with structural equality.
class Point {
 public:
  Point() : v_(0LL) {}
  static Point of_int(long long n) { return Point(Var(n)); }
  static Point of_quad(Quad q);                // normalizes
  static Point of_bits(Bits b);                // sorts, dedups
  static Point of_tuple(Tuple t) { return Point(Var(std::move(t))); }

  bool is_int() const { return v_.index() == 0; }
  bool is_quad() const { return v_.index() == 1; }
  bool is_bits() const { return v_.index() == 2; }
  bool is_tuple() const { return v_.index() == 3; }

  long long as_int() const { return std::get<0>(v_); }
  const Quad& as_quad() const { return std::get<1>(v_); }
  const Bits& as_bits() const { return std::get<2>(v_); }
  const Tuple& as_tuple() const { return std::get<3>(v_); }

  // Every numeric point (Int or Quad) as a Quad value.
  Quad numeric() const;
  bool is_numeric() const { return is_int() || is_quad(); }

  bool operator==(const Point& o) const { return v_ == o.v_; }
  // Structural order (kind rank, then contents); used for deterministic
  // containers, not for numeric order. Numeric order: quad_cmp(numeric()...).
  bool operator<(const Point& o) const;

  std::string str() const;

 private:
  using Var = std::variant<long long, Quad, Bits, Tuple>;
  explicit Point(Var v) : v_(std::move(v)) {}
  Var v_;
};

}  // namespace invprob
