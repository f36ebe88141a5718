#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "invprob/popper.hpp"
#include "invprob/zset.hpp"

namespace invprob {

enum class CompareVerdict { Less, Greater, Equiv, Incomparable, Undetermined };

std::string verdict_str(CompareVerdict v);
CompareVerdict verdict_flip(CompareVerdict v);  // swaps Less/Greater

// A comparable event: either a member mask of some finite algebra (the
// caller keeps the algebra) or a decidable integer set.
using QSet = std::variant<std::uint32_t, ZSet>;

bool qset_is_empty(const QSet& s);
QSet qset_union(const QSet& a, const QSet& b);
bool qset_disjoint(const QSet& a, const QSet& b);
bool qset_equal(const QSet& a, const QSet& b);
QSet qset_empty_like(const QSet& s);
std::string qset_str(const QSet& s);

// Comparison oracle; the claims are promises checked externally, never
// assumed.
struct QualOracle {
  std::function<CompareVerdict(const QSet&, const QSet&)> compare;
  bool claims_total = false;
  bool claims_regular = false;
};

// Partial move on events; nullopt when the image leaves the working scope.
struct QMove {
  std::string name;
  std::function<std::optional<QSet>(const QSet&)> apply;
};

// integer translations acting on ZSet events
std::vector<QMove> translation_moves(const std::vector<long long>& shifts);
// generator directions acting on member masks of a finite algebra
std::vector<QMove> algebra_moves(const FinAlgebra& f,
                                 const std::vector<Generator>& gens);

struct QualViolation {
  std::string law;
  std::string detail;
};

struct QualReport {
  std::vector<QualViolation> violations;  // capped samples
  std::size_t violation_count = 0;
  std::vector<std::string> undetermined;  // capped samples
  std::size_t undetermined_count = 0;     // outside the decided fragment
  std::size_t checked = 0;
  bool pass() const { return violation_count == 0; }
};

// Q1 (preorder), Q2 (empty set below everything), Q3 (disjoint-union
// cancellation, both directions), plus totality/regularity when claimed.
// Undetermined verdicts are tallied separately and never fail the report.
QualReport verify_qual_axioms(const QualOracle& o,
                              const std::vector<QSet>& family);

// A below B when P(A | A-union-B) <= P(B | A-union-B); total on the algebra.
QualOracle qual_from_popper(const PopperTable& p);

// first non-Equiv oracle decides; Undetermined if consulted before resolution
QualOracle lex_combine(std::vector<QualOracle> oracles);

// A below B when every x in A-minus-B has some y in B-minus-A with x <= y.
// Total on finite/cofinite sets; UnsupportedShape otherwise.
CompareVerdict lexmax_compare(const ZSet& a, const ZSet& b);

// strong: A equivalent to each defined image of A
QualReport verify_strong_invariance_qual(const QualOracle& o,
                                         const std::vector<QMove>& moves,
                                         const std::vector<QSet>& family);
// weak: A below B forces image(A) below image(B) when both images exist
QualReport verify_weak_invariance_qual(const QualOracle& o,
                                       const std::vector<QMove>& moves,
                                       const std::vector<QSet>& family);

struct GeneratorOrder {
  std::string generator;
  std::optional<unsigned long long> order;  // nullopt: none found in budget
};

struct FiniteOrderReport {
  std::vector<GeneratorOrder> orders;
  bool certificate = false;  // every generator has finite order
  std::string detail;
};

// Exact order per generator kind where decidable (permutation tables, mask
// reversals, zero translations); otherwise no order within budget is
// reported, which certifies nothing either way.
FiniteOrderReport finite_order_certificate(const std::vector<Generator>& gens,
                                           unsigned long long budget);

struct SkewCheckReport {
  std::size_t total = 0;
  std::size_t less = 0, greater = 0, equiv = 0, incomparable = 0,
              undetermined = 0;
  std::string branch;  // "i", "ii", "empty", or "mixed"
  bool dichotomy_ok() const { return branch != "mixed"; }
};

// Evaluates o on every (half-line-left(m), half-line-right(n)) pair in the
// given inclusive ranges and reports which dichotomy branch is realized.
SkewCheckReport halfline_dichotomy_check(const QualOracle& o, long long m_lo,
                                         long long m_hi, long long n_lo,
                                         long long n_hi);

}  // namespace invprob
