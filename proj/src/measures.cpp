#include "invprob/measures.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "invprob/error.hpp"

namespace invprob {

FinAlgebra FinAlgebra::powerset(std::vector<Point> omega) {
  FinAlgebra f;
  std::set<Point> distinct(omega.begin(), omega.end());
  if (distinct.size() != omega.size())
    fail(Errc::repeated_point, "algebra carrier repeats a point");
  if (omega.size() > 20)
    fail(Errc::invalid_argument, "algebra carrier too large for powerset");
  f.omega_ = std::move(omega);
  for (const Point& p : f.omega_) f.atoms_.push_back({p});
  return f;
}

FinAlgebra FinAlgebra::from_partition(std::vector<Point> omega,
                                      std::vector<std::vector<Point>> blocks) {
  FinAlgebra f;
  std::set<Point> distinct(omega.begin(), omega.end());
  if (distinct.size() != omega.size())
    fail(Errc::repeated_point, "algebra carrier repeats a point");
  if (blocks.size() > 20)
    fail(Errc::invalid_argument, "too many atoms");
  std::set<Point> covered;
  for (auto& b : blocks) {
    if (b.empty()) fail(Errc::invalid_argument, "empty atom");
    std::sort(b.begin(), b.end());
    for (const Point& p : b) {
      if (!distinct.count(p))
        fail(Errc::invalid_argument, "atom point outside carrier: " + p.str());
      if (!covered.insert(p).second)
        fail(Errc::invalid_argument, "atoms overlap at " + p.str());
    }
  }
  if (covered.size() != distinct.size())
    fail(Errc::invalid_argument, "atoms do not cover the carrier");
  f.omega_ = std::move(omega);
  f.atoms_ = std::move(blocks);
  return f;
}

std::vector<Point> FinAlgebra::member_points(std::uint32_t mask) const {
  std::vector<Point> out;
  for (std::size_t a = 0; a < atoms_.size(); ++a)
    if (mask & (1u << a))
      out.insert(out.end(), atoms_[a].begin(), atoms_[a].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint32_t> FinAlgebra::mask_of(
    const std::vector<Point>& pts) const {
  std::set<Point> want(pts.begin(), pts.end());
  std::uint32_t mask = 0;
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    bool any = false, all = true;
    for (const Point& p : atoms_[a]) {
      if (want.count(p))
        any = true;
      else
        all = false;
    }
    if (any && !all) return std::nullopt;  // cuts an atom
    if (any) mask |= 1u << a;
  }
  // reject points outside the carrier
  std::size_t covered = 0;
  for (std::size_t a = 0; a < atoms_.size(); ++a)
    if (mask & (1u << a)) covered += atoms_[a].size();
  if (covered != want.size()) return std::nullopt;
  return mask;
}

std::optional<std::uint32_t> FinAlgebra::image_mask(std::uint32_t mask,
                                                    const Generator& g,
                                                    bool inverse) const {
  std::vector<Point> img;
  for (const Point& p : member_points(mask)) img.push_back(apply_gen(g, p, inverse));
  return mask_of(img);
}

Measure::Measure(std::vector<Point> omega, std::vector<ExtRat> weights)
    : omega_(std::move(omega)), weights_(std::move(weights)) {
  if (omega_.size() != weights_.size())
    fail(Errc::invalid_argument, "measure weight count mismatch");
}

ExtRat Measure::eval(const std::vector<Point>& subset) const {
  std::set<Point> want(subset.begin(), subset.end());
  ExtRat total;
  for (std::size_t i = 0; i < omega_.size(); ++i)
    if (want.count(omega_[i])) total = total + weights_[i];
  return total;
}

ExtRat Measure::eval_mask(const FinAlgebra& f, std::uint32_t mask) const {
  return eval(f.member_points(mask));
}

Measure invariant_unit_measure(const std::vector<Point>& omega,
                               const std::vector<Generator>& gens,
                               const std::vector<Point>& e) {
  std::set<Point> e_set(e.begin(), e.end());
  auto comps = move_components(omega, gens);

  std::size_t meeting = 0;
  for (const auto& c : comps)
    if (std::any_of(c.begin(), c.end(),
                    [&](const Point& p) { return e_set.count(p) > 0; }))
      ++meeting;
  if (meeting == 0)
    fail(Errc::empty_target, "focus set meets no component of the carrier");

  std::map<Point, ExtRat> weight;
  for (const auto& c : comps) {
    std::size_t epart = 0;
    for (const Point& p : c)
      if (e_set.count(p)) ++epart;
    Rat w = epart == 0 ? Rat(0)
                       : Rat(1) / (Rat(meeting) * Rat(epart));
    for (const Point& p : c) weight.emplace(p, ExtRat(w));
  }

  std::vector<ExtRat> weights;
  weights.reserve(omega.size());
  for (const Point& p : omega) weights.push_back(weight.at(p));
  return Measure(omega, std::move(weights));
}

bool renyi_precedes(const Measure& mu, const Measure& nu,
                    const FinAlgebra& f) {
  for (std::uint32_t mask = 0; mask < f.member_count(); ++mask) {
    ExtRat n = nu.eval_mask(f, mask);
    if (!n.is_zero() && !mu.eval_mask(f, mask).is_inf()) return false;
  }
  return true;
}

LevelStack build_level_stack(const std::vector<Point>& omega,
                             const std::vector<Generator>& gens,
                             const FinAlgebra& f, const StageChooser& chooser) {
  StageChooser stage = chooser;
  if (!stage)
    stage = [](const std::vector<Point>& om, const std::vector<Generator>& gs,
               const std::vector<Point>& e) {
      return invariant_unit_measure(om, gs, e);
    };

  LevelStack stack;
  stack.algebra = f;
  stack.levels.push_back(stage(omega, gens, omega));

  while (true) {
    const Measure& mu = stack.levels.back();
    // largest null member: union of all null members
    std::uint32_t null_union = 0;
    for (std::uint32_t mask = 0; mask < f.member_count(); ++mask)
      if (mu.eval_mask(f, mask).is_zero()) null_union |= mask;
    if (null_union == 0) break;
    if (stack.levels.size() > f.atom_count() + 1)
      fail(Errc::internal, "level stack failed to terminate");

    std::vector<Point> e = f.member_points(null_union);
    Measure nu = stage(omega, gens, e);
    std::set<Point> e_set(e.begin(), e.end());
    std::vector<ExtRat> weights;
    weights.reserve(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i)
      weights.push_back(e_set.count(nu.omega()[i]) ? nu.weight(i)
                                                   : ExtRat::infinity());
    stack.levels.emplace_back(omega, std::move(weights));
  }

  stack.level_of_member.assign(f.member_count(), 0);
  for (std::uint32_t mask = 1; mask < f.member_count(); ++mask) {
    for (std::size_t n = 0; n < stack.levels.size(); ++n) {
      ExtRat v = stack.levels[n].eval_mask(f, mask);
      if (!v.is_zero() && !v.is_inf()) {
        stack.level_of_member[mask] = n + 1;
        break;
      }
    }
    if (stack.level_of_member[mask] == 0)
      fail(Errc::internal,
           "no level gives a finite positive measure to member " +
               std::to_string(mask));
  }
  return stack;
}

namespace {

// closure of all seeds under the symmetrized moves, breadth-first over the
// combined frontier; budget counts distinct points overall
std::vector<Point> closure_union(const std::vector<GroupWord>& sym_moves,
                                 const std::vector<Point>& seeds,
                                 const std::vector<Generator>& gens,
                                 const SpaceSpec& omega,
                                 std::uint64_t budget) {
  std::vector<Point> points;
  std::set<Point> seen;
  std::size_t head = 0;
  for (const Point& s : seeds) {
    if (!omega.contains(s))
      fail(Errc::invalid_argument, "seed " + s.str() + " is not admissible");
    if (seen.insert(s).second) points.push_back(s);
  }
  if (points.size() > budget)
    fail(Errc::closure_budget_exceeded, "seed set already exceeds budget");
  while (head < points.size()) {
    Point cur = points[head++];
    for (const GroupWord& w : sym_moves) {
      Point img = apply_word(w, cur, gens);
      if (!omega.contains(img) || seen.count(img)) continue;
      if (points.size() == budget)
        fail(Errc::closure_budget_exceeded,
             "stage support exceeds budget " + std::to_string(budget));
      seen.insert(img);
      points.push_back(std::move(img));
    }
  }
  return points;
}

std::vector<GroupWord> symmetrize(const std::vector<GroupWord>& moves) {
  std::vector<GroupWord> sym = moves;
  for (const GroupWord& w : moves) {
    GroupWord inv = w.inverse();
    if (std::find(sym.begin(), sym.end(), inv) == sym.end())
      sym.push_back(inv);
  }
  return sym;
}

}  // namespace

std::vector<Point> net_stage_support(const NetIndex& idx,
                                     const std::vector<Generator>& gens,
                                     const SpaceSpec& omega,
                                     std::uint64_t budget) {
  if (idx.seeds.empty()) fail(Errc::empty_target, "stage needs a seed set");
  return closure_union(symmetrize(idx.moves), idx.seeds, gens, omega, budget);
}

Rat net_stage_measure(const NetIndex& idx, const std::vector<Point>& u,
                      const std::vector<Generator>& gens,
                      const SpaceSpec& omega, std::uint64_t budget) {
  std::vector<Point> support = net_stage_support(idx, gens, omega, budget);
  std::set<Point> sup(support.begin(), support.end());
  std::set<Point> u_set(u.begin(), u.end());
  std::size_t hit = 0;
  for (const Point& p : u_set)
    if (sup.count(p)) ++hit;
  return Rat(hit) / Rat(support.size());
}

NetComparison net_compare(const std::vector<Point>& u,
                          const std::vector<Point>& v,
                          const std::vector<NetIndex>& schedule,
                          const std::vector<Generator>& gens,
                          const SpaceSpec& omega, std::uint64_t budget) {
  if (schedule.empty()) fail(Errc::invalid_argument, "empty stage schedule");
  NetComparison out;
  for (const NetIndex& idx : schedule) {
    Rat a = net_stage_measure(idx, u, gens, omega, budget);
    Rat b = net_stage_measure(idx, v, gens, omega, budget);
    out.signs.push_back(a == b ? 0 : (a < b ? -1 : 1));
  }
  int last = out.signs.back();
  std::size_t start = out.signs.size();
  while (start > 0 && out.signs[start - 1] == last) --start;
  bool stable = start == 0 || out.signs.size() - start >= 2;
  out.verdict = stable ? NetComparison::Verdict::Stabilized
                       : NetComparison::Verdict::Unstable;
  out.sign = last;
  return out;
}

}  // namespace invprob
