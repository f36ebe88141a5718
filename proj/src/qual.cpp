#include "invprob/qual.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>

#include "invprob/error.hpp"

namespace invprob {
namespace {

constexpr std::size_t kMaxStored = 32;
constexpr std::size_t kMaxUndetStored = 8;

bool lesseq(CompareVerdict v) {
  return v == CompareVerdict::Less || v == CompareVerdict::Equiv;
}

void add_violation(QualReport& r, const std::string& law,
                   const std::string& detail) {
  ++r.violation_count;
  if (r.violations.size() < kMaxStored) r.violations.push_back({law, detail});
}

void add_undetermined(QualReport& r, const std::string& detail) {
  ++r.undetermined_count;
  if (r.undetermined.size() < kMaxUndetStored) r.undetermined.push_back(detail);
}

}  // namespace

std::string verdict_str(CompareVerdict v) {
  switch (v) {
    case CompareVerdict::Less: return "Less";
    case CompareVerdict::Greater: return "Greater";
    case CompareVerdict::Equiv: return "Equiv";
    case CompareVerdict::Incomparable: return "Incomparable";
    case CompareVerdict::Undetermined: return "Undetermined";
  }
  return "?";
}

CompareVerdict verdict_flip(CompareVerdict v) {
  if (v == CompareVerdict::Less) return CompareVerdict::Greater;
  if (v == CompareVerdict::Greater) return CompareVerdict::Less;
  return v;
}

bool qset_is_empty(const QSet& s) {
  if (std::holds_alternative<std::uint32_t>(s))
    return std::get<std::uint32_t>(s) == 0;
  return std::get<ZSet>(s).is_empty();
}

QSet qset_union(const QSet& a, const QSet& b) {
  if (a.index() != b.index())
    fail(Errc::variant_mismatch, "union of mask and integer-set events");
  if (std::holds_alternative<std::uint32_t>(a))
    return std::get<std::uint32_t>(a) | std::get<std::uint32_t>(b);
  return ZSet::unite(std::get<ZSet>(a), std::get<ZSet>(b));
}

bool qset_disjoint(const QSet& a, const QSet& b) {
  if (a.index() != b.index())
    fail(Errc::variant_mismatch, "disjointness of mask and integer-set events");
  if (std::holds_alternative<std::uint32_t>(a))
    return (std::get<std::uint32_t>(a) & std::get<std::uint32_t>(b)) == 0;
  return ZSet::disjoint(std::get<ZSet>(a), std::get<ZSet>(b));
}

bool qset_equal(const QSet& a, const QSet& b) {
  if (a.index() != b.index())
    fail(Errc::variant_mismatch, "equality of mask and integer-set events");
  if (std::holds_alternative<std::uint32_t>(a))
    return std::get<std::uint32_t>(a) == std::get<std::uint32_t>(b);
  return ZSet::equal(std::get<ZSet>(a), std::get<ZSet>(b));
}

QSet qset_empty_like(const QSet& s) {
  if (std::holds_alternative<std::uint32_t>(s)) return std::uint32_t{0};
  return ZSet();
}

std::string qset_str(const QSet& s) {
  if (std::holds_alternative<std::uint32_t>(s))
    return "mask:" + std::to_string(std::get<std::uint32_t>(s));
  return std::get<ZSet>(s).str();
}

std::vector<QMove> translation_moves(const std::vector<long long>& shifts) {
  std::vector<QMove> out;
  for (long long t : shifts) {
    QMove m;
    m.name = "translate" + std::string(t >= 0 ? "+" : "") + std::to_string(t);
    m.apply = [t](const QSet& s) -> std::optional<QSet> {
      if (!std::holds_alternative<ZSet>(s))
        fail(Errc::variant_mismatch, "translation applied to a mask event");
      return QSet(std::get<ZSet>(s).translated(t));
    };
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<QMove> algebra_moves(const FinAlgebra& f,
                                 const std::vector<Generator>& gens) {
  std::vector<QMove> out;
  auto fp = std::make_shared<FinAlgebra>(f);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (bool inv : {false, true}) {
      QMove m;
      m.name = generator_str(gens[i]) + (inv ? " (inverse)" : "");
      Generator g = gens[i];
      m.apply = [fp, g, inv](const QSet& s) -> std::optional<QSet> {
        if (!std::holds_alternative<std::uint32_t>(s))
          fail(Errc::variant_mismatch, "algebra move applied to an integer set");
        auto img = fp->image_mask(std::get<std::uint32_t>(s), g, inv);
        if (!img) return std::nullopt;
        return QSet(*img);
      };
      out.push_back(std::move(m));
    }
  }
  return out;
}

QualReport verify_qual_axioms(const QualOracle& o,
                              const std::vector<QSet>& family) {
  QualReport r;
  auto cmp = [&](const QSet& a, const QSet& b) { return o.compare(a, b); };

  for (const auto& a : family) {
    ++r.checked;
    CompareVerdict v = cmp(a, a);
    if (v == CompareVerdict::Undetermined) {
      add_undetermined(r, "reflexivity at " + qset_str(a));
    } else if (v != CompareVerdict::Equiv) {
      add_violation(r, "Q1-reflexivity",
                    qset_str(a) + " vs itself: " + verdict_str(v));
    }
    if (!qset_is_empty(a)) {
      ++r.checked;
      CompareVerdict q2 = cmp(qset_empty_like(a), a);
      if (q2 == CompareVerdict::Undetermined) {
        add_undetermined(r, "empty-vs " + qset_str(a));
      } else if (!lesseq(q2)) {
        add_violation(r, "Q2", "empty vs " + qset_str(a) + ": " +
                                   verdict_str(q2));
      }
      if (o.claims_regular && q2 != CompareVerdict::Less &&
          q2 != CompareVerdict::Undetermined) {
        add_violation(r, "regularity", "empty vs " + qset_str(a) + ": " +
                                           verdict_str(q2));
      }
    }
  }

  if (o.claims_total) {
    for (const auto& a : family)
      for (const auto& b : family) {
        ++r.checked;
        CompareVerdict v = cmp(a, b);
        if (v == CompareVerdict::Incomparable)
          add_violation(r, "totality", qset_str(a) + " vs " + qset_str(b));
        else if (v == CompareVerdict::Undetermined)
          add_undetermined(r, qset_str(a) + " vs " + qset_str(b));
      }
  }

  // transitivity of the below-or-equivalent relation
  for (const auto& a : family)
    for (const auto& b : family)
      for (const auto& c : family) {
        CompareVerdict ab = cmp(a, b), bc = cmp(b, c);
        if (ab == CompareVerdict::Undetermined ||
            bc == CompareVerdict::Undetermined)
          continue;
        if (!lesseq(ab) || !lesseq(bc)) continue;
        ++r.checked;
        CompareVerdict ac = cmp(a, c);
        if (ac == CompareVerdict::Undetermined) {
          add_undetermined(r, "transitivity tail " + qset_str(a) + " vs " +
                                  qset_str(c));
        } else if (!lesseq(ac)) {
          add_violation(r, "Q1-transitivity",
                        qset_str(a) + " <= " + qset_str(b) + " <= " +
                            qset_str(c) + " but tail " + verdict_str(ac));
        }
      }

  // Q3: union with a set disjoint from both sides changes nothing
  for (const auto& a : family)
    for (const auto& b : family)
      for (const auto& c : family) {
        if (!qset_disjoint(a, c) || !qset_disjoint(b, c)) continue;
        CompareVerdict before = cmp(a, b);
        CompareVerdict after = cmp(qset_union(a, c), qset_union(b, c));
        if (before == CompareVerdict::Undetermined ||
            after == CompareVerdict::Undetermined) {
          add_undetermined(r, "Q3 at (" + qset_str(a) + ", " + qset_str(b) +
                                  ", " + qset_str(c) + ")");
          continue;
        }
        ++r.checked;
        bool bad = lesseq(before) != lesseq(after) ||
                   lesseq(verdict_flip(before)) != lesseq(verdict_flip(after));
        if (bad)
          add_violation(r, "Q3", "(" + qset_str(a) + ", " + qset_str(b) +
                                     ", " + qset_str(c) + "): " +
                                     verdict_str(before) + " -> " +
                                     verdict_str(after));
      }
  return r;
}

QualOracle qual_from_popper(const PopperTable& p) {
  auto tp = std::make_shared<PopperTable>(p);
  QualOracle o;
  o.claims_total = true;
  o.claims_regular = true;
  o.compare = [tp](const QSet& qa, const QSet& qb) {
    if (!std::holds_alternative<std::uint32_t>(qa) ||
        !std::holds_alternative<std::uint32_t>(qb))
      fail(Errc::variant_mismatch, "popper-backed oracle needs mask events");
    std::uint32_t a = std::get<std::uint32_t>(qa);
    std::uint32_t b = std::get<std::uint32_t>(qb);
    if (a == b) return CompareVerdict::Equiv;
    std::uint32_t u = a | b;
    const Rat& pa = tp->at(a, u);
    const Rat& pb = tp->at(b, u);
    if (pa == pb) return CompareVerdict::Equiv;
    return pa < pb ? CompareVerdict::Less : CompareVerdict::Greater;
  };
  return o;
}

QualOracle lex_combine(std::vector<QualOracle> oracles) {
  auto list = std::make_shared<std::vector<QualOracle>>(std::move(oracles));
  QualOracle o;
  o.claims_total =
      !list->empty() &&
      std::all_of(list->begin(), list->end(),
                  [](const QualOracle& q) { return q.claims_total; });
  o.claims_regular = !list->empty() && list->front().claims_regular;
  o.compare = [list](const QSet& a, const QSet& b) {
    for (const auto& q : *list) {
      CompareVerdict v = q.compare(a, b);
      if (v == CompareVerdict::Undetermined) return v;
      if (v != CompareVerdict::Equiv) return v;
    }
    return CompareVerdict::Equiv;
  };
  return o;
}

namespace {

// finite or complement-of-finite, the only shapes the rule below decides
bool finite_or_cofinite(const ZSet& z, bool* cofinite) {
  if (z.is_finite()) {
    *cofinite = false;
    return true;
  }
  auto c = z.complement();
  if (c && c->is_finite()) {
    *cofinite = true;
    return true;
  }
  return false;
}

// every member of a-minus-b has a member of b-minus-a at or above it
bool lexmax_below(const ZSet& x, const ZSet& y) {
  if (x.is_empty()) return true;
  if (!x.is_finite()) return !y.is_finite();
  if (!y.is_finite()) return true;
  if (y.is_empty()) return false;
  return x.elements().back() <= y.elements().back();
}

}  // namespace

CompareVerdict lexmax_compare(const ZSet& a, const ZSet& b) {
  bool ca = false, cb = false;
  if (!finite_or_cofinite(a, &ca) || !finite_or_cofinite(b, &cb))
    fail(Errc::unsupported_shape,
         "lexmax comparison needs finite or cofinite sets");
  auto x = ZSet::difference(a, b);
  auto y = ZSet::difference(b, a);
  if (!x || !y) fail(Errc::internal, "finite/cofinite difference failed");
  bool ab = lexmax_below(*x, *y);
  bool ba = lexmax_below(*y, *x);
  if (ab && ba) return CompareVerdict::Equiv;
  if (ab) return CompareVerdict::Less;
  if (ba) return CompareVerdict::Greater;
  return CompareVerdict::Incomparable;
}

QualReport verify_strong_invariance_qual(const QualOracle& o,
                                         const std::vector<QMove>& moves,
                                         const std::vector<QSet>& family) {
  QualReport r;
  for (const auto& a : family)
    for (const auto& m : moves) {
      auto img = m.apply(a);
      if (!img) continue;
      ++r.checked;
      CompareVerdict v = o.compare(a, *img);
      if (v == CompareVerdict::Undetermined)
        add_undetermined(r, qset_str(a) + " under " + m.name);
      else if (v != CompareVerdict::Equiv)
        add_violation(r, "strong-invariance",
                      qset_str(a) + " vs its image under " + m.name + ": " +
                          verdict_str(v));
    }
  return r;
}

QualReport verify_weak_invariance_qual(const QualOracle& o,
                                       const std::vector<QMove>& moves,
                                       const std::vector<QSet>& family) {
  QualReport r;
  for (const auto& a : family)
    for (const auto& b : family)
      for (const auto& m : moves) {
        auto ia = m.apply(a);
        auto ib = m.apply(b);
        if (!ia || !ib) continue;
        CompareVerdict before = o.compare(a, b);
        if (before == CompareVerdict::Undetermined) {
          add_undetermined(r, qset_str(a) + " vs " + qset_str(b));
          continue;
        }
        if (!lesseq(before)) continue;
        ++r.checked;
        CompareVerdict after = o.compare(*ia, *ib);
        if (after == CompareVerdict::Undetermined)
          add_undetermined(r, "image pair under " + m.name);
        else if (!lesseq(after))
          add_violation(r, "weak-invariance",
                        qset_str(a) + " <= " + qset_str(b) + " but images under " +
                            m.name + ": " + verdict_str(after));
      }
  return r;
}

namespace {

std::optional<unsigned long long> generator_order(const Generator& g,
                                                  unsigned long long budget) {
  if (std::holds_alternative<TranslateRational>(g)) {
    if (std::get<TranslateRational>(g).step == 0) return 1;
    return std::nullopt;
  }
  if (std::holds_alternative<TranslateQuad>(g)) {
    const auto& q = std::get<TranslateQuad>(g).step;
    if (q.p == 0 && q.q == 0) return 1;
    return std::nullopt;
  }
  if (std::holds_alternative<Shift>(g)) {
    if (std::get<Shift>(g).offset == 0) return 1;
    return std::nullopt;
  }
  if (std::holds_alternative<ReverseMask>(g)) {
    unsigned long long n = std::get<ReverseMask>(g).mask.empty() ? 1 : 2;
    return n <= budget ? std::optional(n) : std::nullopt;
  }
  const auto& tbl = std::get<PermutationTable>(g);
  if (!tbl.is_valid_bijection())
    fail(Errc::invalid_argument, "order of an invalid permutation table");
  // least common multiple of cycle lengths; points outside the table are fixed
  std::map<Point, Point> next;
  for (const auto& pr : tbl.pairs) next[pr.first] = pr.second;
  std::set<Point> seen;
  unsigned long long order = 1;
  for (const auto& pr : tbl.pairs) {
    if (seen.count(pr.first)) continue;
    unsigned long long len = 0;
    Point cur = pr.first;
    do {
      seen.insert(cur);
      ++len;
      auto it = next.find(cur);
      cur = it == next.end() ? cur : it->second;
    } while (!(cur == pr.first) && len <= tbl.pairs.size());
    if (!(cur == pr.first))
      fail(Errc::invalid_argument, "permutation table is not closed");
    order = std::lcm(order, len);
    if (order > budget) return std::nullopt;
  }
  return order;
}

}  // namespace

FiniteOrderReport finite_order_certificate(const std::vector<Generator>& gens,
                                           unsigned long long budget) {
  FiniteOrderReport r;
  r.certificate = true;
  for (const auto& g : gens) {
    GeneratorOrder go;
    go.generator = generator_str(g);
    go.order = generator_order(g, budget);
    if (!go.order) r.certificate = false;
    r.orders.push_back(std::move(go));
  }
  r.detail = r.certificate
                 ? "every generator has finite order; weak invariance of a "
                   "comparison transfers to strong invariance for this group"
                 : "some generator has no order within budget; no certificate";
  return r;
}

SkewCheckReport halfline_dichotomy_check(const QualOracle& o, long long m_lo,
                                         long long m_hi, long long n_lo,
                                         long long n_hi) {
  SkewCheckReport r;
  for (long long m = m_lo; m <= m_hi; ++m)
    for (long long n = n_lo; n <= n_hi; ++n) {
      ++r.total;
      CompareVerdict v =
          o.compare(QSet(ZSet::half_left(m)), QSet(ZSet::half_right(n)));
      switch (v) {
        case CompareVerdict::Less: ++r.less; break;
        case CompareVerdict::Greater: ++r.greater; break;
        case CompareVerdict::Equiv: ++r.equiv; break;
        case CompareVerdict::Incomparable: ++r.incomparable; break;
        case CompareVerdict::Undetermined: ++r.undetermined; break;
      }
    }
  if (r.total == 0)
    r.branch = "empty";
  else if (r.less == r.total)
    r.branch = "i";
  else if (r.greater == r.total)
    r.branch = "ii";
  else
    r.branch = "mixed";
  return r;
}

}  // namespace invprob
