#include "invprob/action.hpp"

#include <deque>
#include <map>

#include "invprob/error.hpp"

namespace invprob {

bool closure_is_finite(const ClosureResult& r) {
  return std::holds_alternative<ClosureFinite>(r);
}

const std::vector<Point>& closure_points(const ClosureResult& r) {
  if (auto* f = std::get_if<ClosureFinite>(&r)) return f->points;
  return std::get<ClosureBudgetExceeded>(r).points;
}

ClosureResult orbit_closure(const Point& start,
                            const std::vector<GroupWord>& moves,
                            const std::vector<Generator>& gens,
                            const SpaceSpec& omega, std::uint64_t budget) {
  if (!omega.contains(start))
    fail(Errc::invalid_argument,
         "closure start " + start.str() + " is not admissible");
  if (budget == 0) fail(Errc::invalid_argument, "closure budget must be > 0");

  std::vector<Point> points{start};
  std::vector<ClosureBudgetExceeded::Edge> edges;
  std::map<Point, std::size_t> seen{{start, 0}};
  std::deque<std::size_t> frontier{0};

  while (!frontier.empty()) {
    std::size_t at = frontier.front();
    frontier.pop_front();
    for (std::size_t m = 0; m < moves.size(); ++m) {
      Point img = apply_word(moves[m], points[at], gens);
      if (!omega.contains(img)) continue;
      if (seen.count(img)) continue;
      if (points.size() == budget) {
        // one more distinct admissible point exists: budget exceeded
        return ClosureBudgetExceeded{std::move(points), std::move(edges)};
      }
      seen.emplace(img, points.size());
      frontier.push_back(points.size());
      edges.push_back({at, m});
      points.push_back(std::move(img));
    }
  }
  return ClosureFinite{std::move(points)};
}

std::vector<Point> unit_interval_ray(std::size_t n) {
  const Quad step{Rat(0), 1};       // sqrt(2)/4
  const Quad back{Rat(-1, 2), 0};   // -1/2
  std::vector<Point> out;
  out.reserve(n + 1);
  Quad x{Rat(0), 0};
  out.push_back(Point::of_quad(x));
  for (std::size_t i = 0; i < n; ++i) {
    Quad fwd = quad_add(x, step);
    x = (quad_cmp_rat(fwd, Rat(1)) <= 0 && quad_cmp_rat(fwd, Rat(0)) >= 0)
            ? fwd
            : quad_add(x, back);
    out.push_back(Point::of_quad(x));
  }
  return out;
}

std::vector<std::vector<Point>> move_components(
    const std::vector<Point>& omega, const std::vector<Generator>& gens) {
  std::map<Point, std::size_t> index;
  for (std::size_t i = 0; i < omega.size(); ++i) index.emplace(omega[i], i);

  std::vector<std::size_t> parent(omega.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  for (std::size_t i = 0; i < omega.size(); ++i)
    for (const Generator& g : gens) {
      Point img = apply_gen(g, omega[i]);
      auto it = index.find(img);
      if (it != index.end()) unite(i, it->second);
    }

  std::map<std::size_t, std::size_t> root_to_comp;
  std::vector<std::vector<Point>> comps;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    std::size_t r = find(i);
    auto [it, fresh] = root_to_comp.emplace(r, comps.size());
    if (fresh) comps.emplace_back();
    comps[it->second].push_back(omega[i]);
  }
  return comps;
}

AxiomReport check_partial_action_axioms(const SpaceSpec& omega,
                                        const std::vector<Generator>& gens,
                                        const std::vector<Point>& sample) {
  AxiomReport rep;
  auto admissible = [&](const Point& p) { return omega.contains(p); };

  for (const Point& x : sample) {
    if (!admissible(x)) continue;
    Point e = apply_word(GroupWord::identity(), x, gens);
    if (!(e == x))
      rep.violations.push_back(
          {"identity", "identity word moved " + x.str(), {x}});
  }

  // directions: each generator taken forward and inverted
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    for (int dir = 0; dir < 2; ++dir) {
      bool inv = dir == 1;
      std::string gname =
          generator_str(gens[gi]) + (inv ? " inverted" : "");

      std::map<Point, Point> images;  // restricted move on the sample
      for (const Point& x : sample) {
        if (!admissible(x)) continue;
        Point y = apply_gen(gens[gi], x, inv);
        if (!admissible(y)) continue;
        // duality: the opposite direction must return to x
        Point back = apply_gen(gens[gi], y, !inv);
        if (!(back == x))
          rep.violations.push_back(
              {"inverse-duality",
               gname + " maps " + x.str() + " to " + y.str() +
                   " but the reverse direction returns " + back.str(),
               {x, y, back}});
        auto [it, fresh] = images.emplace(y, x);
        if (!fresh && !(it->second == x))
          rep.violations.push_back(
              {"injectivity",
               gname + " sends both " + it->second.str() + " and " + x.str() +
                   " to " + y.str(),
               {it->second, x, y}});
      }
    }
  }

  // composition: two-letter words agree with stepwise application whenever
  // the intermediate point is admissible
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (int si : {1, -1})
      for (std::size_t hi = 0; hi < gens.size(); ++hi)
        for (int sh : {1, -1})
          for (const Point& x : sample) {
            if (!admissible(x)) continue;
            Point mid = apply_gen(gens[gi], x, si < 0);
            if (!admissible(mid)) continue;
            Point stepwise = apply_gen(gens[hi], mid, sh < 0);
            if (!admissible(stepwise)) continue;
            GroupWord w;
            w.letters = {{static_cast<int>(gi), si},
                         {static_cast<int>(hi), sh}};
            Point composed = apply_word(w, x, gens);
            if (!(composed == stepwise))
              rep.violations.push_back(
                  {"composition",
                   word_str(w) + " at " + x.str() + " gives " +
                       composed.str() + " but stepwise application gives " +
                       stepwise.str(),
                   {x, mid, stepwise, composed}});
          }
  return rep;
}

}  // namespace invprob
