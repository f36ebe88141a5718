#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invprob/rat.hpp"

namespace invprob {

// Decidable integer sets: finite unions of base shapes with finite edits.
// Base shapes: cofinite complements, half-lines L(n) = {m : m < n} and
// R(n) = {m : m >= n}, and two sparse catalogs (double exponentials 2^(2^k)
// and squares k^2, k >= 1, both carrying an integer offset so the family is
// closed under translation). A set is
//     (union of infinite bases  minus  removed)  union  finite part,
// i.e. explicitly listed members win over removals. All magnitudes (members,
// bounds, offsets) are capped at 2^30, which keeps every sparse intersection
// exactly enumerable in 64-bit arithmetic.
//
// Boolean operations return nullopt when the result has no representation
// here (e.g. a cofinite set minus a sparse set); subset/disjoint/equal are
// total.
class ZSet {
 public:
  enum class BaseKind { Cofinite, HalfLeft, HalfRight, Sparse };
  enum class SparseKind { DoubleExp, Squares };

  struct BaseSet {
    BaseKind kind;
    std::vector<long long> excluded;  // Cofinite
    long long bound = 0;              // half-lines
    SparseKind sparse = SparseKind::DoubleExp;
    long long offset = 0;             // sparse translation

    bool contains(long long x) const;
    bool operator==(const BaseSet& o) const;
  };

  ZSet() = default;  // empty set

  static ZSet finite(std::vector<long long> elems);
  static ZSet cofinite(std::vector<long long> excluded);
  static ZSet half_left(long long n);   // {m : m < n}
  static ZSet half_right(long long n);  // {m : m >= n}
  static ZSet sparse(SparseKind kind, long long offset = 0);

  ZSet with_added(std::vector<long long> elems) const;
  ZSet with_removed(std::vector<long long> elems) const;

  bool contains(long long x) const;
  bool is_empty() const;
  bool is_finite() const { return infinite_.empty(); }

  // exact size / members; invalid_argument when infinite
  std::size_t size() const;
  std::vector<long long> elements() const;

  // Answers are for the mathematical set (sparse catalogs continue past the
  // 64-bit horizon).
  bool infinitely_many_positive() const;  // members > 0 infinite?
  std::vector<long long> positive_elements() const;  // when finitely many

  ZSet translated(long long t) const;
  std::optional<ZSet> complement() const;
  static ZSet intersect(const ZSet& a, const ZSet& b);
  static ZSet unite(const ZSet& a, const ZSet& b);
  static std::optional<ZSet> difference(const ZSet& a, const ZSet& b);
  static bool subset(const ZSet& a, const ZSet& b);
  static bool disjoint(const ZSet& a, const ZSet& b);
  static bool equal(const ZSet& a, const ZSet& b);

  const std::vector<BaseSet>& infinite_parts() const { return infinite_; }

  // members strictly below `hi` of one sparse base (exact)
  static std::vector<long long> base_below(const BaseSet& b, long long hi);

  std::string str() const;

  // Literal grammar, e.g.
  //   finite:[1,2,3]   cofinite-ex:[0]   Lm:0   Rn:5
  //   sparse:double-exp   sparse:squares
  //   "Lm:0 add:[5] remove:[-3]"   "Lm:0 | sparse:double-exp"
  // ('|' joins unions; add/remove edit the group they follow.)
  static ZSet parse(const std::string& literal);

 private:
  void normalize();

  std::vector<long long> finite_;    // explicit members (win over removed_)
  std::vector<BaseSet> infinite_;    // infinite bases
  std::vector<long long> removed_;   // carved out of the infinite bases
};

}  // namespace invprob
