#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invprob/measures.hpp"

namespace invprob {

// Full conditional probability table over a finite algebra: P(A|B) for every
// member pair with B nonempty, stored densely by member masks. Values are
// exact rationals in [0,1].
class PopperTable {
 public:
  PopperTable() = default;
  PopperTable(FinAlgebra f, std::vector<std::vector<Rat>> entries);

  const FinAlgebra& algebra() const { return f_; }
  // B must be nonempty (invalid_argument otherwise).
  const Rat& at(std::uint32_t a_mask, std::uint32_t b_mask) const;
  void set(std::uint32_t a_mask, std::uint32_t b_mask, Rat v);

 private:
  FinAlgebra f_;
  std::vector<std::vector<Rat>> entries_;  // [b_mask][a_mask], row 0 unused
};

// P(A|B) = mu_{n(B)}(A ∩ B) / mu_{n(B)}(B) where n(B) is the unique level
// giving B finite positive measure.
PopperTable popper_from_levels(const LevelStack& stack);

// Exchange-rate table c(A,B) over a finite algebra, B nonempty. Values are
// extended rationals; entries where 0/0 arose are recorded as undefined.
class ExchangeRate {
 public:
  ExchangeRate() = default;
  ExchangeRate(FinAlgebra f,
               std::vector<std::vector<std::optional<ExtRat>>> entries);

  const FinAlgebra& algebra() const { return f_; }
  const std::optional<ExtRat>& at(std::uint32_t a_mask,
                                  std::uint32_t b_mask) const;

 private:
  FinAlgebra f_;
  std::vector<std::vector<std::optional<ExtRat>>> entries_;
};

// c_P(A,B) = P(A|A∪B) / P(B|A∪B) with x/0 = inf (x != 0) and 0/0 undefined.
ExchangeRate exchange_from_popper(const PopperTable& p);

// P_c(A|B) = c(A∩B, B). Runs the exchange axioms first and throws
// invalid_rate when they fail or a needed entry is undefined/non-finite.
PopperTable popper_from_exchange(const ExchangeRate& c);

struct LawViolation {
  std::string law;     // "C1-additivity", "C2", "E2", ...
  std::string detail;
};
struct LawReport {
  std::vector<LawViolation> violations;
  // informational only, not counted in pass(): the classical redundant
  // condition "P(A|B) = P(B|A) = 1 implies P(C|A) = P(C|B)"
  std::vector<LawViolation> derived_notes;
  std::uint64_t checked = 0;
  std::uint64_t sampled = 0;  // nonzero when triple sweeps were sampled
  bool pass() const { return violations.empty(); }
};

// C1: each P(.|B) is a finitely additive probability (range, normalization,
// additivity via atom decomposition). C2: P(A∩B|C) = P(A|C) * P(B|A∩C) for
// all triples with A∩C nonempty; when A∩C is empty both P(A|C) and P(A∩B|C)
// must vanish (the degenerate branch). Exhaustive up to 2^10 members for C1
// and 2^6 members for the cubic C2 sweep; larger algebras use seeded triple
// sampling.
LawReport verify_popper_axioms(const PopperTable& p, std::uint64_t seed = 1);

// E1: first-slot additivity and nonnegativity; E2: c(A,B) c(B,C) = c(A,C)
// whenever B, C nonempty and the product avoids 0 * inf and no leg is
// undefined; E3: c(B,B) = 1. Same sweep limits as the conditional table.
LawReport verify_exchange_axioms(const ExchangeRate& c, std::uint64_t seed = 1);

struct InvarianceViolation {
  std::string detail;
  std::uint32_t a_mask = 0, b_mask = 0;
};
struct InvarianceReport {
  std::vector<InvarianceViolation> violations;
  std::uint64_t checked = 0;
  bool pass() const { return violations.empty(); }
};

// Strong invariance: P(gA|B) = P(A|B) for every generator direction g and
// members A, B with A ⊆ B, gA a member and gA ⊆ B.
InvarianceReport verify_strong_invariance_popper(
    const PopperTable& p, const std::vector<Generator>& gens);

// Weak invariance: P(A|B) = P(gA|gB) whenever A, B, gA, gB are all members
// and B, gB are nonempty.
InvarianceReport verify_weak_invariance_popper(
    const PopperTable& p, const std::vector<Generator>& gens);

// Same invariance notions for an exchange-rate table: strong means
// c(gA, B) = c(A, B) whenever gA is a member (both sides defined).
InvarianceReport verify_strong_invariance_exchange(
    const ExchangeRate& c, const std::vector<Generator>& gens);

}  // namespace invprob
