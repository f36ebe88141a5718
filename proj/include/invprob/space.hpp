#pragma once

#include <set>
#include <string>
#include <variant>

#include "invprob/point.hpp"

namespace invprob {

// Decidable admissible-region predicates carving Omega out of the ambient
// space. `All` admits everything; `Interval` admits numeric points within
// (possibly open) rational bounds; `Integers` admits exactly the Int kind;
// `Explicit` admits a finite listed set.
struct SpaceAll {};
struct SpaceInterval {
  Rat lo, hi;
  bool lo_open = false, hi_open = false;
};
struct SpaceIntegers {};
struct SpaceExplicit {
  std::set<Point> points;
};

struct SpaceSpec {
  std::variant<SpaceAll, SpaceInterval, SpaceIntegers, SpaceExplicit> region;

  static SpaceSpec all() { return {SpaceAll{}}; }
  static SpaceSpec interval(Rat lo, Rat hi, bool lo_open = false,
                            bool hi_open = false) {
    return {SpaceInterval{std::move(lo), std::move(hi), lo_open, hi_open}};
  }
  static SpaceSpec integers() { return {SpaceIntegers{}}; }
  static SpaceSpec explicit_set(std::set<Point> pts) {
    return {SpaceExplicit{std::move(pts)}};
  }

  bool contains(const Point& x) const;
  std::string str() const;
};

}  // namespace invprob
