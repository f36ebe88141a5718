#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invprob/extrat.hpp"
#include "invprob/qual.hpp"
#include "invprob/zset.hpp"

namespace invprob {

// Finitely supported rational function on the integers.
class FinFn {
 public:
  FinFn() = default;
  explicit FinFn(std::map<long long, Rat> values);
  static FinFn delta(long long x);  // unit mass at x

  Rat at(long long x) const;
  const std::map<long long, Rat>& support() const { return vals_; }
  Rat sum() const;
  bool operator==(const FinFn& o) const { return vals_ == o.vals_; }
  std::string str() const;

 private:
  std::map<long long, Rat> vals_;  // nonzero values only
};

FinFn convolve(const FinFn& f, const FinFn& g);

// Formal difference of indicators: +1 on plus, -1 on minus, 0 elsewhere.
// The two sets are disjoint.
struct IndicatorDiff {
  ZSet plus;
  ZSet minus;
};

// d = 1_B - 1_A with plus = B minus A, minus = A minus B.
// UnsupportedShape when a difference has no representation.
IndicatorDiff indicator_diff(const ZSet& a, const ZSet& b);

// negative part finite, and the extended sum (infinite positive part counts
// as plus-infinity) is nonnegative
bool has_X1(const IndicatorDiff& d);
// infinitely many positive positions at positive coordinates, only finitely
// many negative positions there
bool has_X2(const IndicatorDiff& d);

// Order induced by the decidable fragment: with d = 1_B - 1_A, membership of
// d / -d in X1-or-X2 yields Less / Greater / Equiv; neither side decided
// gives Undetermined (completion-dependent).
CompareVerdict c0_compare(const ZSet& a, const ZSet& b);

// c0_compare packaged as an oracle over integer-set events
QualOracle cone_oracle();

struct GammaResult {
  enum class Kind { Value, Undetermined, Undefined };
  Kind kind = Kind::Undetermined;
  ExtRat value;  // meaningful only when kind == Value

  static GammaResult of(ExtRat v) { return {Kind::Value, std::move(v)}; }
  static GammaResult undetermined() { return {Kind::Undetermined, {}}; }
  static GammaResult undefined() { return {Kind::Undefined, {}}; }
  bool determined() const { return kind == Kind::Value; }
  std::string str() const;
};

// Scaling threshold of 1_A against 1_B: the infimum over alpha of membership
// of alpha*1_B - 1_A in the fragment, when the upper and lower thresholds
// coincide. Undefined when both sets are empty; plus-infinity when only B is
// equivalent to empty.
GammaResult gamma_indicator(const ZSet& a, const ZSet& b);

struct SkewResult {
  bool determined = false;
  Rat value;  // conditional probability when determined
  std::string str() const;
};

// P(A|B) = gamma(1 on A-intersect-B, 1 on B); B nonempty.
SkewResult skew_popper(const ZSet& a, const ZSet& b);

struct GammaLawReport {
  bool additivity_applicable = false;  // a, b disjoint
  bool additivity_checked = false;     // all legs determined
  bool additivity_ok = true;
  std::string additivity_detail;
  bool cocycle_checked = false;  // legs determined and product defined
  bool cocycle_ok = true;
  std::string cocycle_detail;

  bool pass() const { return additivity_ok && cocycle_ok; }
  int laws_checked() const {
    return (additivity_checked ? 1 : 0) + (cocycle_checked ? 1 : 0);
  }
};

// first-argument additivity over a disjoint pair, and the multiplicative
// chain rule through the middle set, checked where every leg is determined
GammaLawReport gamma_law_check(const ZSet& a, const ZSet& b, const ZSet& c);

}  // namespace invprob
