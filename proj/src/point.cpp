#include "invprob/point.hpp"

#include <algorithm>

#include "invprob/error.hpp"

namespace invprob {

namespace {

// sign of q * sqrt(2)/4 - t, exact
int radical_cmp(long long q, const Rat& t) {
  if (q == 0) return t == 0 ? 0 : (t < 0 ? 1 : -1);
  if (q > 0) {
    if (t <= 0) return 1;
    // both sides positive: compare squares q^2/8 vs t^2
    Rat lhs = Rat(q) * Rat(q) / 8;
    Rat rhs = t * t;
    return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
  }
  if (t >= 0) return -1;
  Rat lhs = Rat(q) * Rat(q) / 8;  // |q sqrt2/4|^2
  Rat rhs = t * t;
  // both negative: q*s < t <=> |q*s| > |t|
  return lhs == rhs ? 0 : (lhs > rhs ? -1 : 1);
}

}  // namespace

int quad_cmp_rat(const Quad& a, const Rat& b) {
  // a.p + a.q*s vs b  <=>  a.q*s vs b - a.p
  return radical_cmp(a.q, b - a.p);
}

int quad_cmp(const Quad& a, const Quad& b) {
  // (a.q - b.q)*s vs b.p - a.p
  return radical_cmp(a.q - b.q, b.p - a.p);
}

Quad quad_add(const Quad& a, const Quad& b) { return {a.p + b.p, a.q + b.q}; }

std::string quad_str(const Quad& a) {
  if (a.q == 0) return a.p.str();
  std::string s = a.p == 0 ? "" : a.p.str();
  if (a.q > 0 && !s.empty()) s += "+";
  s += std::to_string(a.q) + "*sqrt(2)/4";
  return s;
}

Point Point::of_quad(Quad q) {
  if (q.q == 0 && is_integer(q.p)) {
    BigInt n = numerator(q.p);
    if (n >= std::numeric_limits<long long>::min() &&
        n <= std::numeric_limits<long long>::max())
      return of_int(static_cast<long long>(n));
  }
  return Point(Var(std::move(q)));
}

Point Point::of_bits(Bits b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return Point(Var(std::move(b)));
}

Quad Point::numeric() const {
  if (is_int()) return Quad{Rat(as_int()), 0};
  if (is_quad()) return as_quad();
  fail(Errc::variant_mismatch, "point is not numeric: " + str());
}

bool Point::operator<(const Point& o) const {
  if (v_.index() != o.v_.index()) return v_.index() < o.v_.index();
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_) < std::get<0>(o.v_);
    case 1: {
      const Quad& a = std::get<1>(v_);
      const Quad& b = std::get<1>(o.v_);
      if (a.p != b.p) return a.p < b.p;
      return a.q < b.q;
    }
    case 2:
      return std::get<2>(v_) < std::get<2>(o.v_);
    default: {
      const Tuple& a = std::get<3>(v_);
      const Tuple& b = std::get<3>(o.v_);
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                          b.end());
    }
  }
}

std::string Point::str() const {
  switch (v_.index()) {
    case 0:
      return std::to_string(as_int());
    case 1:
      return quad_str(as_quad());
    case 2: {
      std::string s = "bits{";
      bool first = true;
      for (long long i : as_bits()) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
      }
      return s + "}";
    }
    default: {
      std::string s = "(";
      bool first = true;
      for (const Point& p : as_tuple()) {
        if (!first) s += ",";
        s += p.str();
        first = false;
      }
      return s + ")";
    }
  }
}

}  // namespace invprob
