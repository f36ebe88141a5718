#include "invprob/space.hpp"

namespace invprob {

bool SpaceSpec::contains(const Point& x) const {
  return std::visit(
      [&](const auto& r) -> bool {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, SpaceAll>)
          return true;
        else if constexpr (std::is_same_v<R, SpaceInterval>) {
          if (!x.is_numeric()) return false;
          Quad q = x.numeric();
          int lo = quad_cmp_rat(q, r.lo);
          int hi = quad_cmp_rat(q, r.hi);
          if (lo < 0 || (lo == 0 && r.lo_open)) return false;
          if (hi > 0 || (hi == 0 && r.hi_open)) return false;
          return true;
        } else if constexpr (std::is_same_v<R, SpaceIntegers>)
          return x.is_int();
        else
          return r.points.count(x) > 0;
      },
      region);
}

std::string SpaceSpec::str() const {
  return std::visit(
      [](const auto& r) -> std::string {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, SpaceAll>)
          return "all";
        else if constexpr (std::is_same_v<R, SpaceInterval>)
          return std::string(r.lo_open ? "(" : "[") + r.lo.str() + "," +
                 r.hi.str() + (r.hi_open ? ")" : "]");
        else if constexpr (std::is_same_v<R, SpaceIntegers>)
          return "integers";
        else
          return "finite-set[" + std::to_string(r.points.size()) + "]";
      },
      region);
}

}  // namespace invprob
