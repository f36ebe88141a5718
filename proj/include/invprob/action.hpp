#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "invprob/generator.hpp"
#include "invprob/space.hpp"

namespace invprob {

// Breadth-first reachable set of x under word-moves H inside Omega. Words
// evaluate through the ambient space; only endpoints need membership.
struct ClosureFinite {
  std::vector<Point> points;  // discovery order, points[0] == start
};
struct ClosureBudgetExceeded {
  // First `budget` distinct points in discovery order, plus for each
  // discovered point (index >= 1) the tree edge that found it.
  std::vector<Point> points;
  struct Edge {
    std::size_t parent;  // index into points
    std::size_t move;    // index into H
  };
  std::vector<Edge> edges;  // edges[i] discovered points[i+1]
};
using ClosureResult = std::variant<ClosureFinite, ClosureBudgetExceeded>;

bool closure_is_finite(const ClosureResult& r);
const std::vector<Point>& closure_points(const ClosureResult& r);

// Pre: start is in omega (invalid_argument otherwise). Budget counts distinct
// points kept; the result is Finite iff the closure completes within budget.
ClosureResult orbit_closure(const Point& start,
                            const std::vector<GroupWord>& moves,
                            const std::vector<Generator>& gens,
                            const SpaceSpec& omega, std::uint64_t budget);

// The greedy ray in [0,1]: x0 = 0 and x_{n+1} = x_n + sqrt(2)/4 when that
// stays in [0,1], else x_n - 1/2. Returns n+1 points; every point lies in
// [0,1] and (exactly, by irrationality) no point repeats.
std::vector<Point> unit_interval_ray(std::size_t n);

// Undirected components of the graph on `omega` with an edge {x, gx} for
// each generator move keeping both endpoints in omega. Components are listed
// by first appearance in `omega` order; each component keeps that order.
std::vector<std::vector<Point>> move_components(
    const std::vector<Point>& omega, const std::vector<Generator>& gens);

// Restricted-bijection axioms on a finite sample: identity word acts as the
// identity; applying g then g^-1 (either order) returns to the start whenever
// the intermediate point is admissible, and restricted moves are injective on
// the sample; two-letter compositions agree with composed application when
// the intermediate stays admissible. Violations carry the witness.
struct AxiomViolation {
  std::string axiom;  // "identity", "inverse-duality", "injectivity", "composition"
  std::string detail;
  std::vector<Point> witness;
};
struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

AxiomReport check_partial_action_axioms(const SpaceSpec& omega,
                                        const std::vector<Generator>& gens,
                                        const std::vector<Point>& sample);

}  // namespace invprob
