#include "invprob/cone.hpp"

#include <algorithm>

#include "invprob/error.hpp"

namespace invprob {

FinFn::FinFn(std::map<long long, Rat> values) : vals_(std::move(values)) {
  for (auto it = vals_.begin(); it != vals_.end();)
    it = it->second == 0 ? vals_.erase(it) : std::next(it);
}

FinFn FinFn::delta(long long x) { return FinFn({{x, Rat(1)}}); }

Rat FinFn::at(long long x) const {
  auto it = vals_.find(x);
  return it == vals_.end() ? Rat(0) : it->second;
}

Rat FinFn::sum() const {
  Rat s = 0;
  for (const auto& [x, v] : vals_) s += v;
  return s;
}

std::string FinFn::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [x, v] : vals_) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(x) + ":" + rat_str(v);
  }
  return s + "}";
}

FinFn convolve(const FinFn& f, const FinFn& g) {
  std::map<long long, Rat> out;
  for (const auto& [x, fx] : f.support())
    for (const auto& [y, gy] : g.support()) out[x + y] += fx * gy;
  return FinFn(std::move(out));
}

IndicatorDiff indicator_diff(const ZSet& a, const ZSet& b) {
  auto plus = ZSet::difference(b, a);
  auto minus = ZSet::difference(a, b);
  if (!plus || !minus)
    fail(Errc::unsupported_shape,
         "indicator difference is not representable for these sets");
  return {std::move(*plus), std::move(*minus)};
}

bool has_X1(const IndicatorDiff& d) {
  if (!d.minus.is_finite()) return false;
  if (!d.plus.is_finite()) return true;  // extended sum is plus-infinity
  return d.plus.size() >= d.minus.size();
}

bool has_X2(const IndicatorDiff& d) {
  return d.plus.infinitely_many_positive() &&
         !d.minus.infinitely_many_positive();
}

namespace {

bool has_X(const IndicatorDiff& d) { return has_X1(d) || has_X2(d); }

// one constant-value region of a rational step function on the integers
struct Region {
  const ZSet* set;
  Rat value;
};

// the X1-or-X2 membership test for a disjoint-region step function
bool region_in_x(const std::vector<Region>& regions) {
  bool x1 = true, pos_infinite = false;
  Rat sum = 0;
  for (const auto& r : regions) {
    if (r.value == 0 || r.set->is_empty()) continue;
    if (!r.set->is_finite()) {
      if (r.value < 0) {
        x1 = false;
        break;
      }
      pos_infinite = true;
    } else {
      sum += r.value * Rat(r.set->size());
    }
  }
  if (x1 && (pos_infinite || sum >= 0)) return true;

  bool pos_tail = false, neg_tail = false;
  for (const auto& r : regions) {
    if (r.value == 0 || r.set->is_empty()) continue;
    if (r.set->infinitely_many_positive())
      (r.value > 0 ? pos_tail : neg_tail) = true;
  }
  return pos_tail && !neg_tail;
}

}  // namespace

CompareVerdict c0_compare(const ZSet& a, const ZSet& b) {
  auto plus = ZSet::difference(b, a);
  auto minus = ZSet::difference(a, b);
  if (!plus || !minus) return CompareVerdict::Undetermined;
  IndicatorDiff d{*plus, *minus};
  IndicatorDiff neg{d.minus, d.plus};
  bool fwd = has_X(d), rev = has_X(neg);
  if (fwd && rev) {
    if (!d.plus.is_finite() || !d.minus.is_finite() ||
        d.plus.size() != d.minus.size())
      fail(Errc::internal, "equivalence without a zero-sum finite difference");
    return CompareVerdict::Equiv;
  }
  if (fwd) return CompareVerdict::Less;
  if (rev) return CompareVerdict::Greater;
  return CompareVerdict::Undetermined;
}

QualOracle cone_oracle() {
  QualOracle o;
  o.claims_total = false;
  o.claims_regular = true;
  o.compare = [](const QSet& a, const QSet& b) {
    if (!std::holds_alternative<ZSet>(a) || !std::holds_alternative<ZSet>(b))
      fail(Errc::variant_mismatch, "cone oracle needs integer-set events");
    return c0_compare(std::get<ZSet>(a), std::get<ZSet>(b));
  };
  return o;
}

std::string GammaResult::str() const {
  switch (kind) {
    case Kind::Value: return value.str();
    case Kind::Undetermined: return "undetermined";
    case Kind::Undefined: return "undefined";
  }
  return "?";
}

namespace {

// -inf / finite / +inf threshold
struct Bound {
  int cls = 0;  // -1, 0, +1
  Rat v;
  bool operator==(const Bound& o) const {
    return cls == o.cls && (cls != 0 || v == o.v);
  }
};

}  // namespace

GammaResult gamma_indicator(const ZSet& a, const ZSet& b) {
  if (a.is_empty() && b.is_empty()) return GammaResult::undefined();
  auto p = ZSet::difference(b, a);
  auto m = ZSet::difference(a, b);
  if (!p || !m) return GammaResult::undetermined();
  ZSet j = ZSet::intersect(a, b);

  // h(alpha) = alpha on p, alpha-1 on j, -1 on m
  auto in_u = [&](const Rat& al) {
    return region_in_x({{&*p, al}, {&j, al - 1}, {&*m, Rat(-1)}});
  };
  auto in_d = [&](const Rat& al) {
    return region_in_x({{&*p, -al}, {&j, Rat(1) - al}, {&*m, Rat(1)}});
  };

  // membership switches only where a region coefficient changes sign or the
  // finite-data sum crosses zero
  std::vector<Rat> bps = {Rat(0), Rat(1)};
  if (p->is_finite() && j.is_finite() && m->is_finite()) {
    Rat denom = Rat(p->size()) + Rat(j.size());
    if (denom > 0) bps.push_back((Rat(j.size()) + Rat(m->size())) / denom);
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  const Rat lo = bps.front() - 1, hi = bps.back() + 1;

  Bound inf_u{+1};
  if (in_u(lo)) {
    inf_u = {-1};
  } else {
    for (std::size_t i = 0; i < bps.size(); ++i) {
      if (in_u(bps[i])) {
        inf_u = {0, bps[i]};
        break;
      }
      Rat probe = i + 1 < bps.size() ? (bps[i] + bps[i + 1]) / 2 : hi;
      if (in_u(probe)) {
        inf_u = {0, bps[i]};  // true on the open side above bps[i]
        break;
      }
    }
  }

  Bound sup_d{-1};
  if (in_d(hi)) {
    sup_d = {+1};
  } else {
    for (std::size_t i = bps.size(); i-- > 0;) {
      if (in_d(bps[i])) {
        sup_d = {0, bps[i]};
        break;
      }
      Rat probe = i > 0 ? (bps[i - 1] + bps[i]) / 2 : lo;
      if (in_d(probe)) {
        sup_d = {0, bps[i]};  // true on the open side below bps[i]
        break;
      }
    }
  }

  if (!(inf_u == sup_d)) return GammaResult::undetermined();
  if (inf_u.cls > 0) return GammaResult::of(ExtRat::infinity());
  if (inf_u.cls < 0 || inf_u.v < 0)
    fail(Errc::internal, "negative scaling threshold");
  return GammaResult::of(ExtRat(inf_u.v));
}

std::string SkewResult::str() const {
  return determined ? rat_str(value) : "undetermined";
}

SkewResult skew_popper(const ZSet& a, const ZSet& b) {
  if (b.is_empty())
    fail(Errc::empty_target, "conditioning set is empty");
  GammaResult g = gamma_indicator(ZSet::intersect(a, b), b);
  if (g.kind == GammaResult::Kind::Undefined)
    fail(Errc::internal, "undefined threshold with a nonempty target");
  if (!g.determined()) return {};
  if (g.value.is_inf())
    fail(Errc::internal, "conditional value above one");
  return {true, g.value.finite_value()};
}

GammaLawReport gamma_law_check(const ZSet& a, const ZSet& b, const ZSet& c) {
  GammaLawReport r;
  r.additivity_applicable = ZSet::disjoint(a, b);
  if (!r.additivity_applicable) {
    r.additivity_detail = "not applicable: first pair intersects";
  } else {
    GammaResult ga = gamma_indicator(a, c);
    GammaResult gb = gamma_indicator(b, c);
    GammaResult gu = gamma_indicator(ZSet::unite(a, b), c);
    if (ga.determined() && gb.determined() && gu.determined()) {
      r.additivity_checked = true;
      ExtRat rhs = ga.value + gb.value;
      r.additivity_ok = gu.value == rhs;
      r.additivity_detail = "union " + gu.str() + " vs parts " + ga.str() +
                            " + " + gb.str();
    } else {
      r.additivity_detail = "skipped: a leg is not determined";
    }
  }

  GammaResult gab = gamma_indicator(a, b);
  GammaResult gbc = gamma_indicator(b, c);
  GammaResult gac = gamma_indicator(a, c);
  if (gab.determined() && gbc.determined() && gac.determined()) {
    auto prod = mul(gab.value, gbc.value);
    if (prod) {
      r.cocycle_checked = true;
      r.cocycle_ok = gac.value == *prod;
      r.cocycle_detail = "direct " + gac.str() + " vs chain " + gab.str() +
                         " * " + gbc.str();
    } else {
      r.cocycle_detail = "skipped: chain product is not well-defined";
    }
  } else {
    r.cocycle_detail = "skipped: a leg is not determined";
  }
  return r;
}

}  // namespace invprob
