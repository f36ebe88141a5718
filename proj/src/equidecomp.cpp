#include "invprob/equidecomp.hpp"

#include <algorithm>
#include <functional>

#include "invprob/error.hpp"

namespace invprob {

std::optional<Witness> equidecomposable(const std::vector<Point>& a,
                                        const std::vector<Point>& b,
                                        const std::vector<GroupWord>& moves,
                                        const std::vector<Generator>& gens,
                                        const SpaceSpec& omega) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  std::map<Point, std::size_t> b_index;
  for (std::size_t j = 0; j < n; ++j) b_index.emplace(b[j], j);
  if (b_index.size() != n)
    fail(Errc::repeated_point, "target set has repeated points");

  // adjacency: for each source index the reachable target indices with the
  // lowest move index realizing each edge
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::size_t, std::size_t> best;  // target -> first move
    for (std::size_t m = 0; m < moves.size(); ++m) {
      Point img = apply_word(moves[m], a[i], gens);
      if (!omega.contains(img)) continue;
      auto it = b_index.find(img);
      if (it == b_index.end()) continue;
      best.emplace(it->second, m);  // keeps the lowest m
    }
    adj[i].assign(best.begin(), best.end());
  }

  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_b(n, kFree), match_a(n, kFree);
  std::vector<char> visited(n);
  std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
    for (const auto& [j, m] : adj[i]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (match_b[j] == kFree || augment(match_b[j])) {
        match_b[j] = i;
        match_a[i] = j;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(i)) return std::nullopt;
  }

  // group matched pairs into pieces by the lowest move realizing them
  std::map<std::size_t, std::vector<Point>> by_move;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = match_a[i];
    std::size_t mv = kFree;
    for (const auto& [jj, m] : adj[i])
      if (jj == j) {
        mv = m;
        break;
      }
    by_move[mv].push_back(a[i]);
  }
  Witness w;
  for (auto& [m, pts] : by_move) {
    std::sort(pts.begin(), pts.end());
    w.pieces.push_back({std::move(pts), moves[m]});
  }
  return w;
}

WitnessCheck verify_witness(const std::vector<Point>& a,
                            const std::vector<Point>& b, const Witness& w,
                            const std::vector<Generator>& gens,
                            const SpaceSpec& omega) {
  std::set<Point> source(a.begin(), a.end());
  std::set<Point> target(b.begin(), b.end());
  if (source.size() != a.size()) return {false, "source set repeats a point"};
  if (target.size() != b.size()) return {false, "target set repeats a point"};

  std::set<Point> covered, images;
  for (const WitnessPiece& piece : w.pieces) {
    for (const Point& x : piece.piece) {
      if (!source.count(x))
        return {false, "piece point " + x.str() + " is outside the source"};
      if (!covered.insert(x).second)
        return {false, "pieces overlap at " + x.str()};
      Point img = apply_word(piece.word, x, gens);
      if (!omega.contains(img))
        return {false, "image " + img.str() + " is not admissible"};
      if (!target.count(img))
        return {false, "image " + img.str() + " is outside the target"};
      if (!images.insert(img).second)
        return {false, "images overlap at " + img.str()};
    }
  }
  if (covered != source) return {false, "pieces do not cover the source"};
  if (images != target) return {false, "images do not cover the target"};
  return {true, ""};
}

RayPieces ray_decomposition(const std::vector<Point>& ray,
                            const std::vector<GroupWord>& moves,
                            const std::vector<Generator>& gens) {
  std::set<Point> distinct(ray.begin(), ray.end());
  if (distinct.size() != ray.size())
    fail(Errc::repeated_point, "ray repeats a point");
  if (ray.empty()) fail(Errc::invalid_argument, "empty ray");

  RayPieces out;
  out.pieces.resize(moves.size());
  for (std::size_t i = 0; i + 1 < ray.size(); ++i) {
    bool placed = false;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      if (apply_word(moves[m], ray[i], gens) == ray[i + 1]) {
        out.pieces[m].push_back(ray[i]);
        placed = true;
        break;
      }
    }
    if (!placed)
      fail(Errc::no_move_fits,
           "no move maps ray point " + std::to_string(i) + " (" +
               ray[i].str() + ") to its successor");
  }

  // moved pieces must partition the ray minus its first element (the last
  // ray point is exempt on the source side: no step leaves it)
  std::set<Point> moved;
  for (std::size_t m = 0; m < moves.size(); ++m)
    for (const Point& x : out.pieces[m]) {
      Point img = apply_word(moves[m], x, gens);
      if (!moved.insert(img).second)
        fail(Errc::internal, "moved pieces overlap at " + img.str());
    }
  std::set<Point> expected(ray.begin() + 1, ray.end());
  if (moved != expected)
    fail(Errc::internal, "moved pieces do not partition ray minus start");
  return out;
}

bool BitCylinder::contains(const Bits& support) const {
  auto has = [&](long long i) {
    return std::binary_search(support.begin(), support.end(), i);
  };
  for (const auto& [coord, bit] : fixed)
    if (has(coord) != (bit == 1)) return false;
  if (zeros_from)
    for (long long i : support)
      if (i >= *zeros_from) return false;
  if (zeros_through)
    for (long long i : support)
      if (i <= *zeros_through) return false;
  return true;
}

long long BitCylinder::max_constraint_coord() const {
  long long m = 0;
  for (const auto& [coord, bit] : fixed) m = std::max(m, std::abs(coord));
  if (zeros_from) m = std::max(m, std::abs(*zeros_from));
  if (zeros_through) m = std::max(m, std::abs(*zeros_through));
  return m;
}

long long BitCylinder::min_constraint_coord() const {
  return -max_constraint_coord();
}

namespace {

bool desc_contains(const SetDesc& d, const Point& p) {
  if (d.cylinder) return d.cylinder->contains(p.as_bits());
  for (const Point& q : *d.finite)
    if (q == p) return true;
  return false;
}

long long word_displacement(const GroupWord& w,
                            const std::vector<Generator>& gens) {
  long long total = 0;
  for (const auto& [idx, sign] : w.letters)
    if (const auto* s = std::get_if<Shift>(&gens[idx]))
      total += std::abs(s->offset);
  return total;
}

}  // namespace

ParadoxCheck paradox_witness_check(const ParadoxWitness& pw,
                                   const std::vector<Generator>& gens) {
  if (pw.whole.finite)
    return {false, "target set is finite: finite sets are never paradoxical",
            0};

  const long long t = pw.depth;
  if (t < 1) fail(Errc::invalid_argument, "depth must be >= 1");
  auto check_coords = [&](const SetDesc& d) {
    if (d.cylinder && d.cylinder->max_constraint_coord() > t)
      fail(Errc::truncation_too_shallow,
           "cylinder constraint falls outside the depth window");
  };
  check_coords(pw.whole);
  check_coords(pw.part_a);
  check_coords(pw.part_b);
  for (const auto* w : {&pw.to_e_from_a, &pw.to_e_from_b})
    for (const DescribedPiece& piece : w->pieces) check_coords(piece.piece);

  long long margin = 0;
  for (const auto* w : {&pw.to_e_from_a, &pw.to_e_from_b})
    for (const DescribedPiece& piece : w->pieces)
      margin = std::max(margin, word_displacement(piece.word, gens));
  if (2 * t + 1 > 24)
    fail(Errc::invalid_argument, "depth too large to enumerate");
  if (t - margin < 0)
    fail(Errc::truncation_too_shallow,
         "witness words displace beyond the depth window");

  // enumerate every support inside [-t, t]
  const int width = static_cast<int>(2 * t + 1);
  const std::uint32_t count = 1u << width;
  auto to_bits = [&](std::uint32_t mask) {
    Bits b;
    for (int i = 0; i < width; ++i)
      if (mask & (1u << i)) b.push_back(i - t);
    return b;
  };
  auto within = [&](const Bits& b, long long bound) {
    for (long long i : b)
      if (i < -bound || i > bound) return false;
    return true;
  };

  std::vector<Point> e_pts, a_pts, b_pts;
  for (std::uint32_t m = 0; m < count; ++m) {
    Bits bits = to_bits(m);
    Point p = Point::of_bits(bits);
    bool in_a = desc_contains(pw.part_a, p);
    bool in_b = desc_contains(pw.part_b, p);
    bool in_e = desc_contains(pw.whole, p);
    if (in_a && in_b)
      return {false, "parts intersect at " + p.str(), count};
    if ((in_a || in_b) && !in_e)
      return {false, "part point " + p.str() + " is outside the whole",
              count};
    if (in_e && !(in_a || in_b))
      return {false, "whole point " + p.str() + " is in neither part", count};
    if (in_e) e_pts.push_back(p);
    if (in_a) a_pts.push_back(p);
    if (in_b) b_pts.push_back(p);
  }

  const long long interior = t - margin;
  std::set<Point> e_interior;
  for (const Point& p : e_pts)
    if (within(p.as_bits(), interior)) e_interior.insert(p);

  auto check_side = [&](const DescribedWitness& w,
                        const std::vector<Point>& source,
                        const std::string& label) -> ParadoxCheck {
    std::set<Point> covered;
    std::set<Point> images_interior;
    for (const Point& p : source) {
      int piece_idx = -1;
      for (std::size_t k = 0; k < w.pieces.size(); ++k)
        if (desc_contains(w.pieces[k].piece, p)) {
          if (piece_idx >= 0)
            return {false,
                    label + ": pieces overlap at " + p.str(), count};
          piece_idx = static_cast<int>(k);
        }
      if (piece_idx < 0)
        return {false, label + ": point " + p.str() + " is in no piece",
                count};
      covered.insert(p);
      Point img = apply_word(w.pieces[piece_idx].word, p, gens);
      if (within(img.as_bits(), interior)) {
        if (!e_interior.count(img))
          return {false,
                  label + ": image " + img.str() + " is outside the whole",
                  count};
        if (!images_interior.insert(img).second)
          return {false, label + ": images overlap at " + img.str(), count};
      }
    }
    // interior whole points must all be hit: their preimages live inside the
    // full window by the margin bound
    if (images_interior != e_interior)
      return {false,
              label + ": images do not cover the whole within the interior "
                      "window",
              count};
    return {true, "", count};
  };

  ParadoxCheck ca = check_side(pw.to_e_from_a, a_pts, "first witness");
  if (!ca.ok) return ca;
  ParadoxCheck cb = check_side(pw.to_e_from_b, b_pts, "second witness");
  if (!cb.ok) return cb;
  return {true, "", count};
}

}  // namespace invprob
