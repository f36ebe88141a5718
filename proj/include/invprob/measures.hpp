#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invprob/action.hpp"
#include "invprob/extrat.hpp"

namespace invprob {

// Finite algebra over an ordered finite point list: atoms are the blocks of a
// partition; members are unions of atoms encoded as bitmasks over atoms.
// Member masks run 0 .. (1 << atom_count) - 1; mask 0 is the empty set.
class FinAlgebra {
 public:
  // Powerset: every singleton is an atom.
  static FinAlgebra powerset(std::vector<Point> omega);
  // Partition algebra: each block is an atom. Blocks must tile omega.
  static FinAlgebra from_partition(std::vector<Point> omega,
                                   std::vector<std::vector<Point>> blocks);

  std::size_t atom_count() const { return atoms_.size(); }
  std::uint32_t member_count() const { return 1u << atoms_.size(); }
  const std::vector<Point>& omega() const { return omega_; }
  const std::vector<std::vector<Point>>& atoms() const { return atoms_; }

  std::vector<Point> member_points(std::uint32_t mask) const;
  // Mask whose atom-union equals the given point set; nullopt when the set is
  // not a union of atoms.
  std::optional<std::uint32_t> mask_of(const std::vector<Point>& pts) const;
  std::uint32_t full_mask() const { return member_count() - 1; }

  // Image of a member under a generator direction; nullopt when the image is
  // not a member (or leaves omega).
  std::optional<std::uint32_t> image_mask(std::uint32_t mask,
                                          const Generator& g,
                                          bool inverse) const;

 private:
  std::vector<Point> omega_;
  std::vector<std::vector<Point>> atoms_;
};

// Point-weighted measure on a finite point list; evaluation on a set is the
// sum of its point weights (totally defined: inf absorbs).
class Measure {
 public:
  Measure() = default;
  Measure(std::vector<Point> omega, std::vector<ExtRat> weights);

  const std::vector<Point>& omega() const { return omega_; }
  const ExtRat& weight(std::size_t i) const { return weights_[i]; }
  ExtRat eval(const std::vector<Point>& subset) const;
  ExtRat eval_mask(const FinAlgebra& f, std::uint32_t mask) const;

 private:
  std::vector<Point> omega_;
  std::vector<ExtRat> weights_;
};

// Canonical invariant probability concentrated on E: mass 1/k for each of
// the k move-graph components meeting E, spread uniformly over the
// component's E-part, and extended at that same per-point weight across the
// whole component. Components missing E get weight zero. E must meet omega.
Measure invariant_unit_measure(const std::vector<Point>& omega,
                               const std::vector<Generator>& gens,
                               const std::vector<Point>& e);

// mu precedes nu: every member with positive nu-measure has infinite
// mu-measure. Exact sweep over all members.
bool renyi_precedes(const Measure& mu, const Measure& nu, const FinAlgebra& f);

// Stack of measures mu_1 .. mu_N: mu_1 is a stage measure for E = omega;
// E_{n+1} is the union of the mu_n-null members; while E_{n+1} is nonempty,
// mu_{n+1} takes a stage measure nu for E_{n+1} inside it and infinity
// outside (per point: nu-weight on E_{n+1}, infinity elsewhere). Every
// nonempty member then has a unique level where its measure is finite and
// positive. The stage-measure chooser defaults to the canonical rule; tests
// may supply any generator-invariant chooser.
struct LevelStack {
  FinAlgebra algebra;
  std::vector<Measure> levels;                 // levels[n-1] = mu_n
  std::vector<std::size_t> level_of_member;    // mask -> n (1-based); 0 for {}

  std::size_t depth() const { return levels.size(); }
};

using StageChooser = std::function<Measure(
    const std::vector<Point>& omega, const std::vector<Generator>& gens,
    const std::vector<Point>& e)>;

LevelStack build_level_stack(const std::vector<Point>& omega,
                             const std::vector<Generator>& gens,
                             const FinAlgebra& f,
                             const StageChooser& chooser = nullptr);

// Stage of the finite-evidence net: a finite move set H and seed set B,
// ordered by componentwise inclusion.
struct NetIndex {
  std::vector<GroupWord> moves;
  std::vector<Point> seeds;
};

// The stage measure at (H, B): symmetrize H' = H ∪ H^-1, grow B' as the
// union of H'-closures of the seeds, and return |U ∩ B'| / |B'|. Throws
// closure_budget_exceeded when B' does not complete within budget.
Rat net_stage_measure(const NetIndex& idx, const std::vector<Point>& u,
                      const std::vector<Generator>& gens,
                      const SpaceSpec& omega, std::uint64_t budget);

// Fully grown B' at a stage (for reporting and property checks).
std::vector<Point> net_stage_support(const NetIndex& idx,
                                     const std::vector<Generator>& gens,
                                     const SpaceSpec& omega,
                                     std::uint64_t budget);

// Compares mu(U) against mu(V) along a finite schedule of stages. The
// verdict is evidence, not a limit: Stabilized iff the sign sequence is
// constant on a terminal segment that starts at index 0 or has length >= 2.
struct NetComparison {
  enum class Verdict { Stabilized, Unstable } verdict;
  int sign = 0;  // -1/0/+1 of the final stage (meaningful when stabilized)
  std::vector<int> signs;
};
NetComparison net_compare(const std::vector<Point>& u,
                          const std::vector<Point>& v,
                          const std::vector<NetIndex>& schedule,
                          const std::vector<Generator>& gens,
                          const SpaceSpec& omega, std::uint64_t budget);

}  // namespace invprob
