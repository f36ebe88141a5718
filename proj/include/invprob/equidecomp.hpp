#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invprob/action.hpp"

namespace invprob {

// Finite equidecomposition: pieces partition the source and their word-images
// partition the target, all inside the admissible region.
struct WitnessPiece {
  std::vector<Point> piece;  // subset of the source, structural order
  GroupWord word;
};
struct Witness {
  std::vector<WitnessPiece> pieces;
};

// Searches for a witness that A and B are equidecomposable using single
// moves from `moves`: maximum bipartite matching (deterministic Kuhn
// augmenting in index order) on the graph a -> b when some move maps a to b.
// Each matched pair is assigned the lowest-index move realizing it and pairs
// are grouped into pieces by move. nullopt when |A| != |B| or no perfect
// matching exists.
std::optional<Witness> equidecomposable(const std::vector<Point>& a,
                                        const std::vector<Point>& b,
                                        const std::vector<GroupWord>& moves,
                                        const std::vector<Generator>& gens,
                                        const SpaceSpec& omega);

struct WitnessCheck {
  bool ok = false;
  std::string detail;  // first failure, empty when ok
};

// Exact verification: pieces partition A, images partition B, every image
// point is admissible.
WitnessCheck verify_witness(const std::vector<Point>& a,
                            const std::vector<Point>& b, const Witness& w,
                            const std::vector<Generator>& gens,
                            const SpaceSpec& omega);

// Splits a repetition-free ray by which move fired at each step: piece k
// holds the ray points whose outgoing step used moves[k] (first fitting move
// wins). The final ray point belongs to no piece (truncation boundary).
// Verifies that the moved pieces partition the ray minus its first element.
// Errors: repeated_point, no_move_fits.
struct RayPieces {
  std::vector<std::vector<Point>> pieces;  // indexed like moves
};
RayPieces ray_decomposition(const std::vector<Point>& ray,
                            const std::vector<GroupWord>& moves,
                            const std::vector<Generator>& gens);

// Cylinder constraint over two-sided binary sequences: finitely many pinned
// coordinates plus optional "all zero from k upward" / "all zero up to k"
// tails. Describes the admissible sets of the paradox check.
struct BitCylinder {
  std::map<long long, int> fixed;          // coordinate -> 0/1
  std::optional<long long> zeros_from;     // support ∩ [k, +inf) = empty
  std::optional<long long> zeros_through;  // support ∩ (-inf, k] = empty

  bool contains(const Bits& support) const;
  long long max_constraint_coord() const;
  long long min_constraint_coord() const;
};

// A set in the paradox witness: a cylinder or an explicit finite list.
struct SetDesc {
  std::optional<BitCylinder> cylinder;
  std::optional<std::vector<Point>> finite;  // bit-sequence points
};

struct DescribedPiece {
  SetDesc piece;
  GroupWord word;
};
struct DescribedWitness {
  std::vector<DescribedPiece> pieces;
};

// E ⊇ A ⊔ B with A ~ E and B ~ E, checked exactly on every point
// distinguishable at the truncation depth: all finite-support sequences with
// support inside [-depth, depth]. Image-side partition checks are restricted
// to the window shrunk by the maximum total shift displacement of any
// witness word (points whose images cross the boundary are exempt).
// A finite E yields false. truncation_too_shallow when a constraint
// coordinate falls outside the window.
struct ParadoxWitness {
  SetDesc whole, part_a, part_b;
  DescribedWitness to_e_from_a, to_e_from_b;
  long long depth = 8;
};

struct ParadoxCheck {
  bool ok = false;
  std::string detail;
  std::size_t window_points = 0;  // points enumerated
};
ParadoxCheck paradox_witness_check(const ParadoxWitness& pw,
                                   const std::vector<Generator>& gens);

}  // namespace invprob
