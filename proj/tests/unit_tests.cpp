#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "invprob/action.hpp"
#include "invprob/cone.hpp"
#include "invprob/equidecomp.hpp"
#include "invprob/error.hpp"
#include "invprob/extrat.hpp"
#include "invprob/measures.hpp"
#include "invprob/point.hpp"
#include "invprob/popper.hpp"
#include "invprob/qual.hpp"
#include "invprob/report.hpp"
#include "invprob/scenario.hpp"
#include "invprob/space.hpp"
#include "invprob/zset.hpp"

using namespace invprob;

namespace {

// Runs fn expecting an invprob::Error and returns its code.
template <class Fn>
Errc errc_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an invprob::Error");
  return Errc::internal;
}

Point ip(long long n) { return Point::of_int(n); }

std::vector<Point> ips(std::initializer_list<long long> ns) {
  std::vector<Point> out;
  for (long long n : ns) out.push_back(ip(n));
  return out;
}

PermutationTable cycle_table(int n) {
  PermutationTable t;
  for (int i = 0; i < n; i++) t.pairs.push_back({ip(i), ip((i + 1) % n)});
  return t;
}

ZSet de() { return ZSet::sparse(ZSet::SparseKind::DoubleExp); }
ZSet sq() { return ZSet::sparse(ZSet::SparseKind::Squares); }

}  // namespace

// ---------------------------------------------------------------- rationals

TEST_CASE("rational parsing accepts p and p/q and rejects junk") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-1/2") == Rat(-1, 2));
  CHECK(parse_rat("4/6") == Rat(2, 3));
  CHECK(errc_of([] { parse_rat(""); }) == Errc::parse_error);
  CHECK(errc_of([] { parse_rat("1.5"); }) == Errc::parse_error);
  CHECK(errc_of([] { parse_rat("1/0"); }) == Errc::parse_error);
  CHECK(is_integer(Rat(4, 2)));
  CHECK(!is_integer(Rat(1, 2)));
}

TEST_CASE("extended rationals: order, arithmetic edges, parsing") {
  ExtRat half{Rat(1, 2)};
  ExtRat inf = ExtRat::infinity();
  CHECK(half < inf);
  CHECK(!(inf < inf));
  CHECK((half + inf).is_inf());
  CHECK((half + half) == ExtRat(Rat(1)));
  CHECK(!mul(ExtRat(Rat(0)), inf).has_value());
  CHECK(!div(ExtRat(Rat(0)), ExtRat(Rat(0))).has_value());
  CHECK(div(half, ExtRat(Rat(0)))->is_inf());
  CHECK(*div(half, inf) == ExtRat(Rat(0)));
  CHECK(!div(inf, inf).has_value());
  CHECK(inf.str() == "inf");
  CHECK(parse_extrat("inf").is_inf());
  CHECK(parse_extrat("2/3") == ExtRat(Rat(2, 3)));
  CHECK(errc_of([] { parse_extrat("-1"); }) == Errc::invalid_argument);
}

// ------------------------------------------------------------------- points

TEST_CASE("quad points with zero radical normalize to integers") {
  CHECK(Point::of_quad({Rat(3), 0}) == ip(3));
  CHECK(Point::of_quad({Rat(3), 0}).is_int());
  CHECK(Point::of_quad({Rat(1, 2), 0}).is_quad());
  CHECK(Point::of_quad({Rat(0), 1}).is_quad());
  CHECK(Point::of_quad({Rat(1), 2}).str() == "1+2*sqrt(2)/4");
}

TEST_CASE("bit-sequence points sort and dedup their support") {
  CHECK(Point::of_bits({3, 1, 3}) == Point::of_bits({1, 3}));
  CHECK(Point::of_bits({2, 0}).str() == "bits{0,2}");
  CHECK(Point::of_tuple({ip(1), ip(2)}).str() == "(1,2)");
}

TEST_CASE("quad comparison is exact") {
  CHECK(quad_cmp({Rat(0), 1}, {Rat(1), 0}) == -1);  // sqrt(2)/4 < 1
  CHECK(quad_cmp({Rat(0), 3}, {Rat(1), 0}) == 1);   // 3*sqrt(2)/4 > 1
  CHECK(quad_cmp({Rat(1, 2), 1}, {Rat(1, 2), 1}) == 0);
  CHECK(quad_cmp_rat({Rat(0), 2}, Rat(7, 10)) == 1);  // sqrt(2)/2 > 0.7
  Quad s = quad_add({Rat(1, 2), 1}, {Rat(-1), 2});
  CHECK(s == Quad{Rat(-1, 2), 3});
}

TEST_CASE("structural point order ranks kinds before contents") {
  CHECK(ip(100) < Point::of_quad({Rat(0), 1}));
  CHECK(Point::of_quad({Rat(9), 9}) < Point::of_bits({0}));
  CHECK(ip(1) < ip(2));
  std::set<Point> s = {ip(2), ip(1), Point::of_bits({0})};
  CHECK(s.size() == 3);
}

// --------------------------------------------------------------- generators

TEST_CASE("generators act on their point kinds and reject the rest") {
  Generator tr = TranslateRational{Rat(1, 2)};
  CHECK(apply_gen(tr, ip(1)) == Point::of_quad({Rat(3, 2), 0}));
  CHECK(apply_gen(tr, ip(1), true) == Point::of_quad({Rat(1, 2), 0}));
  CHECK(errc_of([&] { apply_gen(tr, Point::of_bits({0})); }) ==
        Errc::variant_mismatch);

  Generator tq = TranslateQuad{Quad{Rat(0), 1}};
  CHECK(apply_gen(tq, ip(0)) == Point::of_quad({Rat(0), 1}));
  CHECK(apply_gen(tq, apply_gen(tq, ip(0)), true) == ip(0));

  Generator sh = Shift{2};
  CHECK(apply_gen(sh, Point::of_bits({0, 3})) == Point::of_bits({2, 5}));
  CHECK(apply_gen(sh, Point::of_bits({2, 5}), true) == Point::of_bits({0, 3}));

  Generator rv = ReverseMask{Bits{0, 1}};
  Point x = Point::of_bits({1, 4});
  CHECK(apply_gen(rv, x) == Point::of_bits({0, 4}));
  CHECK(apply_gen(rv, apply_gen(rv, x)) == x);  // involution
}

TEST_CASE("permutation tables extend by the identity off their domain") {
  PermutationTable sw;
  sw.pairs = {{ip(0), ip(1)}, {ip(1), ip(0)}};
  CHECK(sw.is_valid_bijection());
  Generator g = sw;
  CHECK(apply_gen(g, ip(0)) == ip(1));
  CHECK(apply_gen(g, ip(7)) == ip(7));
  CHECK(apply_gen(g, ip(1), true) == ip(0));

  PermutationTable bad;
  bad.pairs = {{ip(0), ip(1)}, {ip(1), ip(0)}, {ip(2), ip(0)}};
  CHECK(!bad.is_valid_bijection());
}

TEST_CASE("words compose left to right and invert letterwise") {
  std::vector<Generator> gens = {TranslateRational{Rat(2)},
                                 TranslateRational{Rat(3)}};
  GroupWord w = GroupWord::single(0).then(GroupWord::single(1, -1));
  CHECK(word_str(w) == "g0.g1'");
  CHECK(apply_word(w, ip(0), gens) == ip(-1));
  CHECK(apply_word(w.inverse(), ip(-1), gens) == ip(0));
  CHECK(apply_word(GroupWord::identity(), ip(5), gens) == ip(5));
  CHECK(generator_str(gens[0]) == "translate(2)");
  CHECK(generator_str(ReverseMask{Bits{0, 3}}) == "reverse{0,3}");
}

// ------------------------------------------------------------------- spaces

TEST_CASE("space predicates admit exactly their region") {
  CHECK(SpaceSpec::all().contains(Point::of_bits({5})));
  CHECK(SpaceSpec::integers().contains(ip(-3)));
  CHECK(!SpaceSpec::integers().contains(Point::of_quad({Rat(1, 2), 0})));
  SpaceSpec iv = SpaceSpec::interval(Rat(0), Rat(1), false, true);
  CHECK(iv.contains(ip(0)));
  CHECK(iv.contains(Point::of_quad({Rat(0), 2})));
  CHECK(!iv.contains(ip(1)));  // hi open
  CHECK(!iv.contains(Point::of_bits({0})));
  SpaceSpec ex = SpaceSpec::explicit_set({ip(0), ip(4)});
  CHECK(ex.contains(ip(4)));
  CHECK(!ex.contains(ip(1)));
}

// ------------------------------------------------------------------- action

TEST_CASE("orbit closure enumerates the 4-cycle in discovery order") {
  std::vector<Generator> gens = {cycle_table(4)};
  SpaceSpec sp = SpaceSpec::explicit_set({ip(0), ip(1), ip(2), ip(3)});
  auto r = orbit_closure(ip(0), {GroupWord::single(0)}, gens, sp, 100);
  REQUIRE(closure_is_finite(r));
  CHECK(closure_points(r) == ips({0, 1, 2, 3}));
}

TEST_CASE("orbit closure reports budget exhaustion with tree edges") {
  std::vector<Generator> gens = {TranslateRational{Rat(1)}};
  auto r = orbit_closure(ip(0), {GroupWord::single(0)}, gens,
                         SpaceSpec::integers(), 10);
  REQUIRE(!closure_is_finite(r));
  auto& be = std::get<ClosureBudgetExceeded>(r);
  CHECK(be.points.size() == 10);
  CHECK(be.edges.size() == 9);
  CHECK(be.points.back() == ip(9));
  CHECK(be.edges[0].parent == 0);
}

TEST_CASE("orbit closure rejects a start outside the space") {
  std::vector<Generator> gens = {TranslateRational{Rat(1)}};
  CHECK(errc_of([&] {
          orbit_closure(ip(5), {GroupWord::single(0)}, gens,
                        SpaceSpec::explicit_set({ip(0)}), 10);
        }) == Errc::invalid_argument);
}

TEST_CASE("the greedy interval ray walks exactly as specified") {
  auto ray = unit_interval_ray(8);
  REQUIRE(ray.size() == 9);
  const char* expected[] = {
      "0",
      "1*sqrt(2)/4",
      "2*sqrt(2)/4",
      "-1/2+2*sqrt(2)/4",
      "-1/2+3*sqrt(2)/4",
      "-1/2+4*sqrt(2)/4",
      "-1+4*sqrt(2)/4",
      "-1+5*sqrt(2)/4",
      "-3/2+5*sqrt(2)/4",
  };
  for (int i = 0; i < 9; i++) CHECK(ray[i].str() == expected[i]);

  // defining rule, re-derived step by step: +sqrt(2)/4 when it stays in
  // [0,1], else -1/2; every point in [0,1]; no repeats
  Quad up{Rat(0), 1};
  Quad down{Rat(-1, 2), 0};
  std::set<Point> seen;
  for (std::size_t i = 0; i < ray.size(); i++) {
    Quad v = ray[i].numeric();
    CHECK(quad_cmp_rat(v, Rat(0)) >= 0);
    CHECK(quad_cmp_rat(v, Rat(1)) <= 0);
    CHECK(seen.insert(ray[i]).second);
    if (i + 1 < ray.size()) {
      Quad next = quad_add(v, up);
      if (quad_cmp_rat(next, Rat(1)) > 0) next = quad_add(v, down);
      CHECK(ray[i + 1] == Point::of_quad(next));
    }
  }
}

TEST_CASE("move components split by reachability and keep omega order") {
  std::vector<Point> omega = ips({0, 1, 2, 10, 11});
  auto comps = move_components(omega, {TranslateRational{Rat(1)}});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == ips({0, 1, 2}));
  CHECK(comps[1] == ips({10, 11}));
}

TEST_CASE("partial-action axioms hold for honest generators") {
  std::vector<Point> sample;
  for (int i = -4; i <= 4; i++) sample.push_back(ip(i));
  auto rep = check_partial_action_axioms(
      SpaceSpec::integers(),
      {TranslateRational{Rat(2)}, cycle_table(3)}, sample);
  CHECK(rep.pass());
}

TEST_CASE("a non-bijective table trips inverse-duality and injectivity") {
  PermutationTable bad;
  bad.pairs = {{ip(0), ip(1)}, {ip(1), ip(0)}, {ip(2), ip(0)}};
  auto rep = check_partial_action_axioms(SpaceSpec::integers(), {bad},
                                         ips({-1, 0, 1, 2, 3}));
  REQUIRE(!rep.pass());
  std::set<std::string> axioms;
  for (auto& v : rep.violations) axioms.insert(v.axiom);
  CHECK(axioms.count("injectivity") == 1);
  CHECK(axioms.count("inverse-duality") == 1);
  bool found = false;
  for (auto& v : rep.violations)
    if (v.detail.find("sends both 1 and 2 to 0") != std::string::npos)
      found = true;
  CHECK(found);
}

// --------------------------------------------------------------- equidecomp

TEST_CASE("matching finds a one-piece translation witness") {
  std::vector<Generator> gens = {TranslateRational{Rat(2)},
                                 TranslateRational{Rat(3)}};
  std::vector<GroupWord> moves = {GroupWord::single(0), GroupWord::single(1)};
  auto w = equidecomposable(ips({0, 1, 5}), ips({2, 3, 7}), moves, gens,
                            SpaceSpec::integers());
  REQUIRE(w.has_value());
  REQUIRE(w->pieces.size() == 1);
  CHECK(w->pieces[0].word == GroupWord::single(0));
  CHECK(w->pieces[0].piece == ips({0, 1, 5}));
  CHECK(verify_witness(ips({0, 1, 5}), ips({2, 3, 7}), *w, gens,
                       SpaceSpec::integers())
            .ok);
}

TEST_CASE("matching returns nothing on size mismatch or unreachable targets") {
  std::vector<Generator> gens = {TranslateRational{Rat(2)}};
  std::vector<GroupWord> moves = {GroupWord::single(0)};
  CHECK(!equidecomposable(ips({0}), ips({1, 2}), moves, gens,
                          SpaceSpec::integers()));
  CHECK(!equidecomposable(ips({0}), ips({9}), moves, gens,
                          SpaceSpec::integers()));
}

TEST_CASE("witness verification rejects a wrong word") {
  std::vector<Generator> gens = {TranslateRational{Rat(2)},
                                 TranslateRational{Rat(3)}};
  std::vector<GroupWord> moves = {GroupWord::single(0), GroupWord::single(1)};
  auto w = equidecomposable(ips({0, 1}), ips({2, 3}), moves, gens,
                            SpaceSpec::integers());
  REQUIRE(w.has_value());
  Witness corrupt = *w;
  corrupt.pieces[0].word = GroupWord::single(1);
  auto chk = verify_witness(ips({0, 1}), ips({2, 3}), corrupt, gens,
                            SpaceSpec::integers());
  CHECK(!chk.ok);
  CHECK(!chk.detail.empty());
}

TEST_CASE("ray decomposition groups points by the move that fired") {
  // integer ray under +1: a single piece of all but the final point
  auto rp = ray_decomposition(ips({0, 1, 2, 3, 4, 5}), {GroupWord::single(0)},
                              {TranslateRational{Rat(1)}});
  REQUIRE(rp.pieces.size() == 1);
  CHECK(rp.pieces[0].size() == 5);

  // interval ray: 8 steps split 5 (+sqrt(2)/4) / 3 (-1/2)
  auto ray = unit_interval_ray(8);
  auto rp2 = ray_decomposition(
      ray, {GroupWord::single(0), GroupWord::single(1)},
      {TranslateQuad{Quad{Rat(0), 1}}, TranslateRational{Rat(-1, 2)}});
  REQUIRE(rp2.pieces.size() == 2);
  CHECK(rp2.pieces[0].size() == 5);
  CHECK(rp2.pieces[1].size() == 3);

  CHECK(errc_of([&] {
          ray_decomposition(ips({0, 1, 0}), {GroupWord::single(0)},
                            {TranslateRational{Rat(1)}});
        }) == Errc::repeated_point);
  CHECK(errc_of([&] {
          ray_decomposition(ips({0, 5}), {GroupWord::single(0)},
                            {TranslateRational{Rat(1)}});
        }) == Errc::no_move_fits);
}

TEST_CASE("bit cylinders decide membership from their constraints") {
  BitCylinder c;
  c.fixed[1] = 1;
  c.zeros_from = 2;
  CHECK(c.contains(Bits{1}));
  CHECK(c.contains(Bits{-5, 1}));
  CHECK(!c.contains(Bits{}));      // coordinate 1 must be set
  CHECK(!c.contains(Bits{1, 2}));  // support must stop before 2
  CHECK(c.max_constraint_coord() == 2);
}

TEST_CASE("the shift/flip paradox witness verifies at depth 6") {
  auto cp = coin_shift_paradox(6);
  auto r = paradox_witness_check(cp.witness, cp.gens);
  CHECK(r.ok);
  CHECK(r.window_points == 8192);  // all supports inside [-6, 6]
}

TEST_CASE("a corrupted paradox witness fails with a concrete point") {
  auto cp = coin_shift_paradox(6, true);
  auto r = paradox_witness_check(cp.witness, cp.gens);
  CHECK(!r.ok);
  CHECK(r.detail.find("outside the whole") != std::string::npos);
}

TEST_CASE("too-shallow truncation is an error, not a verdict") {
  auto cp = coin_shift_paradox(1);
  CHECK(errc_of([&] { paradox_witness_check(cp.witness, cp.gens); }) ==
        Errc::truncation_too_shallow);
}

TEST_CASE("a finite whole set can never verify as paradoxical") {
  auto cp = coin_shift_paradox(6);
  cp.witness.whole.cylinder.reset();
  cp.witness.whole.finite = std::vector<Point>{Point::of_bits({})};
  auto r = paradox_witness_check(cp.witness, cp.gens);
  CHECK(!r.ok);
}

// ----------------------------------------------------------------- measures

TEST_CASE("powerset and partition algebras index members by atom masks") {
  FinAlgebra f = FinAlgebra::powerset(ips({0, 1, 2}));
  CHECK(f.atom_count() == 3);
  CHECK(f.member_count() == 8);
  CHECK(f.full_mask() == 7);
  CHECK(*f.mask_of(ips({0})) == 1);
  CHECK(*f.mask_of(ips({0, 2})) == 5);
  CHECK(f.member_points(5) == ips({0, 2}));

  FinAlgebra g = FinAlgebra::from_partition(ips({0, 1, 2}),
                                            {ips({0, 1}), ips({2})});
  CHECK(g.atom_count() == 2);
  CHECK(*g.mask_of(ips({0, 1})) == 1);
  CHECK(!g.mask_of(ips({0})).has_value());  // not a union of atoms
}

TEST_CASE("member images under a generator are masks when they stay inside") {
  FinAlgebra f = FinAlgebra::powerset(ips({0, 1, 2, 3}));
  Generator cyc = cycle_table(4);
  CHECK(*f.image_mask(1, cyc, false) == 2);   // {0} -> {1}
  CHECK(*f.image_mask(8, cyc, false) == 1);   // {3} -> {0}
  CHECK(*f.image_mask(8, cyc, true) == 4);    // {3} <- {2}
  FinAlgebra part = FinAlgebra::powerset(ips({0, 1}));
  CHECK(!part.image_mask(2, cyc, false).has_value());  // {1} -> {2} leaves
}

TEST_CASE("the canonical invariant measure weights components equally") {
  std::vector<Point> omega = ips({0, 1, 2, 10, 11});
  std::vector<Generator> gens = {TranslateRational{Rat(1)}};
  Measure mu = invariant_unit_measure(omega, gens, omega);
  CHECK(mu.weight(0) == ExtRat(Rat(1, 6)));
  CHECK(mu.weight(2) == ExtRat(Rat(1, 6)));
  CHECK(mu.weight(3) == ExtRat(Rat(1, 4)));
  CHECK(mu.eval(omega) == ExtRat(Rat(1)));
  CHECK(mu.eval(ips({0, 1, 2})) == ExtRat(Rat(1, 2)));

  // concentrating on E extends E's per-point weight across components
  Measure nu = invariant_unit_measure(omega, gens, ips({0, 10}));
  for (int i = 0; i < 5; i++) CHECK(nu.weight(i) == ExtRat(Rat(1, 2)));
  CHECK(nu.eval(ips({0, 10})) == ExtRat(Rat(1)));
}

TEST_CASE("canonical level stacks bottom out at depth one") {
  std::vector<Point> omega = ips({0, 1, 2, 3});
  std::vector<Generator> gens = {cycle_table(4)};
  FinAlgebra f = FinAlgebra::powerset(omega);
  auto st = build_level_stack(omega, gens, f);
  CHECK(st.depth() == 1);
  CHECK(st.level_of_member[0] == 0);
  for (std::uint32_t m = 1; m <= f.full_mask(); m++)
    CHECK(st.level_of_member[m] == 1);
}

TEST_CASE("a component-restricted chooser yields a two-level stack") {
  std::vector<Point> omega = ips({0, 1, 2, 10, 11});
  std::vector<Generator> gens = {TranslateRational{Rat(1)}};
  // generator-invariant: components are preserved setwise by every move
  StageChooser first_comp = [](const std::vector<Point>& om,
                               const std::vector<Generator>& gs,
                               const std::vector<Point>& e) {
    auto cs = move_components(om, gs);
    std::vector<Point> cut;
    for (auto& x : e)
      for (auto& y : cs[0])
        if (x == y) cut.push_back(x);
    if (cut.empty()) cut = e;
    return invariant_unit_measure(om, gs, cut);
  };
  FinAlgebra f = FinAlgebra::powerset(omega);
  auto st = build_level_stack(omega, gens, f, first_comp);
  REQUIRE(st.depth() == 2);
  CHECK(st.level_of_member[*f.mask_of(ips({0}))] == 1);
  CHECK(st.level_of_member[*f.mask_of(ips({10}))] == 2);
  CHECK(st.level_of_member[*f.mask_of(ips({0, 10}))] == 1);

  // level 2 is infinite off its stage set, so mu_2 Renyi-precedes mu_1
  CHECK(renyi_precedes(st.levels[1], st.levels[0], f));
  CHECK(!renyi_precedes(st.levels[0], st.levels[1], f));

  PopperTable p = popper_from_levels(st);
  std::uint32_t full = f.full_mask();
  CHECK(p.at(*f.mask_of(ips({10})), *f.mask_of(ips({10, 11}))) == Rat(1, 2));
  CHECK(p.at(*f.mask_of(ips({10})), full) == Rat(0));
  CHECK(p.at(*f.mask_of(ips({0})), full) == Rat(1, 3));
  CHECK(p.at(*f.mask_of(ips({10, 11})), full) == Rat(0));
  CHECK(verify_popper_axioms(p).pass());
  CHECK(verify_strong_invariance_popper(p, gens).pass());
  CHECK(verify_weak_invariance_popper(p, gens).pass());

  // exchange round trip survives the second level
  ExchangeRate c = exchange_from_popper(p);
  PopperTable rt = popper_from_exchange(c);
  for (std::uint32_t b = 1; b <= full; b++)
    for (std::uint32_t a = 0; a <= full; a++) CHECK(rt.at(a, b) == p.at(a, b));
  CHECK(*c.at(*f.mask_of(ips({10})), *f.mask_of(ips({0}))) ==
        ExtRat(Rat(0)));
}

TEST_CASE("net stages measure U against the grown seed closure") {
  std::vector<Generator> gens = {ReverseMask{Bits{0}}, ReverseMask{Bits{1}}};
  SpaceSpec sp = SpaceSpec::all();
  NetIndex idx;
  idx.moves = {GroupWord::single(0), GroupWord::single(1)};
  idx.seeds = {Point::of_bits({})};
  std::vector<Point> u = {Point::of_bits({})};
  CHECK(net_stage_measure(idx, u, gens, sp, 10000) == Rat(1, 4));
  CHECK(net_stage_support(idx, gens, sp, 10000).size() == 4);

  NetIndex small;
  small.moves = {GroupWord::single(0)};
  small.seeds = {Point::of_bits({})};
  CHECK(net_stage_measure(small, u, gens, sp, 10000) == Rat(1, 2));

  std::vector<Point> u2 = {Point::of_bits({}), Point::of_bits({0})};
  CHECK(net_stage_measure(idx, u2, gens, sp, 10000) == Rat(1, 2));
}

TEST_CASE("net stages refuse to grow past the closure budget") {
  NetIndex idx;
  idx.moves = {GroupWord::single(0)};
  idx.seeds = {ip(0)};
  std::vector<Generator> gens = {TranslateRational{Rat(1)}};
  CHECK(errc_of([&] {
          net_stage_measure(idx, ips({0}), gens, SpaceSpec::integers(), 10);
        }) == Errc::closure_budget_exceeded);
}

TEST_CASE("net comparison stabilizes on constant sign tails") {
  std::vector<Generator> gens = {ReverseMask{Bits{0}}, ReverseMask{Bits{1}}};
  SpaceSpec sp = SpaceSpec::all();
  NetIndex s1, s2;
  s1.moves = {GroupWord::single(0)};
  s1.seeds = {Point::of_bits({})};
  s2.moves = {GroupWord::single(0), GroupWord::single(1)};
  s2.seeds = {Point::of_bits({})};
  std::vector<Point> u = {Point::of_bits({})};
  std::vector<Point> v = {Point::of_bits({0})};

  auto eq = net_compare(u, v, {s1, s2}, gens, sp, 10000);
  CHECK(eq.verdict == NetComparison::Verdict::Stabilized);
  CHECK(eq.sign == 0);
  CHECK(eq.signs == std::vector<int>{0, 0});

  std::vector<Point> u2 = {Point::of_bits({}), Point::of_bits({0})};
  auto lt = net_compare(u, u2, {s1, s2}, gens, sp, 10000);
  CHECK(lt.verdict == NetComparison::Verdict::Stabilized);
  CHECK(lt.sign == -1);

  // flip0-only stage ties, flip1-only stage separates: no stable tail
  NetIndex s3;
  s3.moves = {GroupWord::single(1)};
  s3.seeds = {Point::of_bits({})};
  auto un = net_compare(u, v, {s1, s3}, gens, sp, 10000);
  CHECK(un.verdict == NetComparison::Verdict::Unstable);
  CHECK(un.signs == std::vector<int>{0, 1});
}

// ------------------------------------------------------------------- popper

TEST_CASE("level-stack tables carry the uniform conditional values") {
  std::vector<Point> omega = ips({0, 1, 2, 3});
  std::vector<Generator> gens = {cycle_table(4)};
  FinAlgebra f = FinAlgebra::powerset(omega);
  auto st = build_level_stack(omega, gens, f);
  PopperTable p = popper_from_levels(st);
  std::uint32_t full = f.full_mask();
  CHECK(p.at(1, 3) == Rat(1, 2));
  CHECK(p.at(1, full) == Rat(1, 4));
  CHECK(p.at(3, full) == Rat(1, 2));
  CHECK(p.at(1, 1) == Rat(1));
  CHECK(p.at(0, full) == Rat(0));
  CHECK(p.at(full, 1) == Rat(1));
  CHECK(errc_of([&] { p.at(1, 0); }) == Errc::invalid_argument);

  auto law = verify_popper_axioms(p);
  CHECK(law.pass());
  CHECK(law.checked == 4065);
  CHECK(law.sampled == 0);  // 16 members: exhaustive
  auto inv = verify_strong_invariance_popper(p, gens);
  CHECK(inv.pass());
  CHECK(inv.checked == 92);
}

TEST_CASE("exchange rates divide conditional values over the union") {
  std::vector<Point> omega = ips({0, 1, 2, 3});
  FinAlgebra f = FinAlgebra::powerset(omega);
  auto st = build_level_stack(omega, {cycle_table(4)}, f);
  ExchangeRate c = exchange_from_popper(popper_from_levels(st));
  CHECK(*c.at(1, 2) == ExtRat(Rat(1)));
  CHECK(*c.at(3, 4) == ExtRat(Rat(2)));
  CHECK(*c.at(0, 1) == ExtRat(Rat(0)));
  CHECK(verify_exchange_axioms(c).pass());

  PopperTable rt = popper_from_exchange(c);
  for (std::uint32_t b = 1; b <= f.full_mask(); b++)
    for (std::uint32_t a = 0; a <= f.full_mask(); a++)
      CHECK(rt.at(a, b) == popper_from_levels(st).at(a, b));
}

TEST_CASE("hand-built degenerate tables expose undefined exchange entries") {
  FinAlgebra f = FinAlgebra::powerset(ips({0, 1}));
  // all conditional mass on nothing: P({0}|full) = P({1}|full) = 0
  std::vector<std::vector<Rat>> e(4, std::vector<Rat>(4, Rat(0)));
  for (std::uint32_t b = 1; b <= 3; b++) {
    e[b][0] = Rat(0);
    e[b][3] = Rat(1);
    e[b][b] = Rat(1);
  }
  e[1][2] = Rat(0);
  e[2][1] = Rat(0);
  e[3][1] = Rat(0);
  e[3][2] = Rat(0);
  PopperTable p(f, e);
  CHECK(!verify_popper_axioms(p).pass());  // additivity breaks at b = full
  ExchangeRate c = exchange_from_popper(p);
  CHECK(!c.at(1, 2).has_value());  // 0/0
  CHECK(errc_of([&] { popper_from_exchange(c); }) == Errc::invalid_rate);
}

TEST_CASE("invariance verification flags an asymmetric table") {
  FinAlgebra f = FinAlgebra::powerset(ips({0, 1}));
  PermutationTable sw;
  sw.pairs = {{ip(0), ip(1)}, {ip(1), ip(0)}};
  // proper conditional table from the point weights (1/3, 2/3)
  Measure mu({ip(0), ip(1)}, {ExtRat(Rat(1, 3)), ExtRat(Rat(2, 3))});
  std::vector<std::vector<Rat>> e(4, std::vector<Rat>(4, Rat(0)));
  for (std::uint32_t b = 1; b <= 3; b++)
    for (std::uint32_t a = 0; a <= 3; a++) {
      ExtRat num = mu.eval_mask(f, a & b);
      ExtRat den = mu.eval_mask(f, b);
      e[b][a] = num.finite_value() / den.finite_value();
    }
  PopperTable p(f, e);
  CHECK(verify_popper_axioms(p).pass());
  auto inv = verify_strong_invariance_popper(p, {Generator(sw)});
  CHECK(!inv.pass());
  auto winv = verify_weak_invariance_popper(p, {Generator(sw)});
  CHECK(!winv.pass());
  auto xinv = verify_strong_invariance_exchange(exchange_from_popper(p),
                                                {Generator(sw)});
  CHECK(!xinv.pass());
}

// --------------------------------------------------------------------- qual

TEST_CASE("verdict helpers render and flip") {
  CHECK(verdict_str(CompareVerdict::Less) == "Less");
  CHECK(verdict_str(CompareVerdict::Undetermined) == "Undetermined");
  CHECK(verdict_flip(CompareVerdict::Less) == CompareVerdict::Greater);
  CHECK(verdict_flip(CompareVerdict::Equiv) == CompareVerdict::Equiv);
}

TEST_CASE("qset helpers cover both event encodings") {
  QSet m1 = std::uint32_t(3);
  QSet m2 = std::uint32_t(4);
  CHECK(std::get<std::uint32_t>(qset_union(m1, m2)) == 7);
  CHECK(qset_disjoint(m1, m2));
  CHECK(qset_is_empty(qset_empty_like(m1)));
  CHECK(qset_str(m1) == "mask:3");
  QSet z = ZSet::finite({1, 2});
  CHECK(qset_str(z) == "finite:[1,2]");
  CHECK(qset_equal(z, QSet(ZSet::finite({2, 1}))));
  CHECK(!qset_is_empty(z));
}

TEST_CASE("largest-element order decides finite and cofinite comparisons") {
  CHECK(lexmax_compare(ZSet::finite({5}), ZSet::finite({5, 9})) ==
        CompareVerdict::Less);
  CHECK(lexmax_compare(ZSet::finite({5}), ZSet::finite({9})) ==
        CompareVerdict::Less);
  CHECK(lexmax_compare(ZSet::finite({9}), ZSet::finite({5})) ==
        CompareVerdict::Greater);
  CHECK(lexmax_compare(ZSet::finite({5}), ZSet::finite({5})) ==
        CompareVerdict::Equiv);
  CHECK(lexmax_compare(ZSet::finite({}), ZSet::finite({5})) ==
        CompareVerdict::Less);
  CHECK(lexmax_compare(ZSet::finite({}), ZSet::finite({})) ==
        CompareVerdict::Equiv);
  CHECK(lexmax_compare(ZSet::cofinite({3}), ZSet::cofinite({4})) ==
        CompareVerdict::Greater);
  CHECK(lexmax_compare(ZSet::finite({5}), ZSet::cofinite({5})) ==
        CompareVerdict::Less);
  CHECK(errc_of([] { lexmax_compare(ZSet::half_left(0), ZSet::finite({})); }) ==
        Errc::unsupported_shape);
}

namespace {

QualOracle lexmax_oracle() {
  QualOracle o;
  o.claims_total = true;
  o.claims_regular = true;
  o.compare = [](const QSet& a, const QSet& b) {
    return lexmax_compare(std::get<ZSet>(a), std::get<ZSet>(b));
  };
  return o;
}

}  // namespace

TEST_CASE("the largest-element order satisfies the qualitative axioms") {
  std::vector<QSet> family = {
      QSet(ZSet::finite({})),      QSet(ZSet::finite({0})),
      QSet(ZSet::finite({1})),     QSet(ZSet::finite({0, 1})),
      QSet(ZSet::finite({-3, 2})), QSet(ZSet::cofinite({0})),
      QSet(ZSet::cofinite({})),
  };
  auto rep = verify_qual_axioms(lexmax_oracle(), family);
  CHECK(rep.pass());
  CHECK(rep.checked > 0);
  CHECK(rep.undetermined_count == 0);
}

TEST_CASE("undetermined comparisons never fail the qualitative axioms") {
  std::vector<QSet> family = {QSet(de()), QSet(sq()), QSet(ZSet::finite({}))};
  auto rep = verify_qual_axioms(cone_oracle(), family);
  CHECK(rep.pass());
  CHECK(rep.undetermined_count > 0);
}

TEST_CASE("translations preserve the largest-element order only weakly") {
  std::vector<QSet> family;
  for (long long a = -2; a <= 2; a++)
    for (long long b = a; b <= 2; b++)
      family.push_back(QSet(ZSet::finite({a, b})));
  family.push_back(QSet(ZSet::finite({})));
  auto moves = translation_moves({1, -1});
  CHECK(moves[0].name == "translate+1");
  CHECK(verify_weak_invariance_qual(lexmax_oracle(), moves, family).pass());
  auto strong = verify_strong_invariance_qual(lexmax_oracle(), moves, family);
  CHECK(!strong.pass());
  CHECK(strong.violation_count > 0);
  // the failure is the witness pair: {a} below its own translate {a+1}
  CHECK(lexmax_compare(ZSet::finite({0}), ZSet::finite({1})) ==
        CompareVerdict::Less);
}

TEST_CASE("the cone order is strongly translation-invariant on finite sets") {
  std::vector<QSet> family = {
      QSet(ZSet::finite({})),   QSet(ZSet::finite({0})),
      QSet(ZSet::finite({5})),  QSet(ZSet::finite({-1, 4})),
      QSet(ZSet::cofinite({})), QSet(ZSet::cofinite({2})),
  };
  auto moves = translation_moves({1, -1, 7});
  CHECK(verify_strong_invariance_qual(cone_oracle(), moves, family).pass());
  CHECK(verify_weak_invariance_qual(cone_oracle(), moves, family).pass());
}

TEST_CASE("popper tables induce a total regular comparison oracle") {
  std::vector<Point> omega = ips({0, 1, 2, 3});
  FinAlgebra f = FinAlgebra::powerset(omega);
  std::vector<Generator> gens = {cycle_table(4)};
  auto st = build_level_stack(omega, gens, f);
  auto o = qual_from_popper(popper_from_levels(st));
  CHECK(o.claims_total);
  CHECK(o.claims_regular);
  CHECK(o.compare(QSet(std::uint32_t(1)), QSet(std::uint32_t(2))) ==
        CompareVerdict::Equiv);
  CHECK(o.compare(QSet(std::uint32_t(1)), QSet(std::uint32_t(3))) ==
        CompareVerdict::Less);
  CHECK(o.compare(QSet(std::uint32_t(0)), QSet(std::uint32_t(1))) ==
        CompareVerdict::Less);

  std::vector<QSet> family;
  for (std::uint32_t m = 0; m <= f.full_mask(); m++)
    family.push_back(QSet(m));
  CHECK(verify_qual_axioms(o, family).pass());
  auto moves = algebra_moves(f, gens);
  REQUIRE(moves.size() == 2);  // forward and inverse directions
  CHECK(std::get<std::uint32_t>(*moves[0].apply(QSet(std::uint32_t(1)))) == 2);
  CHECK(verify_strong_invariance_qual(o, moves, family).pass());
  CHECK(errc_of([&] { translation_moves({1})[0].apply(QSet(std::uint32_t(1))); }) ==
        Errc::variant_mismatch);
}

TEST_CASE("finite-order certificates cover tables, reversals, zero shifts") {
  PermutationTable sw;
  sw.pairs = {{ip(0), ip(1)}, {ip(1), ip(0)}};
  auto r = finite_order_certificate({Generator(sw), ReverseMask{Bits{2}}},
                                    100);
  CHECK(r.certificate);
  REQUIRE(r.orders.size() == 2);
  CHECK(*r.orders[0].order == 2);
  CHECK(*r.orders[1].order == 2);

  auto r2 = finite_order_certificate({TranslateRational{Rat(1)}}, 100);
  CHECK(!r2.certificate);
  CHECK(!r2.orders[0].order.has_value());

  auto r3 = finite_order_certificate({TranslateRational{Rat(0)}}, 100);
  CHECK(r3.certificate);
  CHECK(*r3.orders[0].order == 1);
}

TEST_CASE("the half-line sweep realizes dichotomy branch (i)") {
  auto hl = halfline_dichotomy_check(cone_oracle(), -3, 3, -3, 3);
  CHECK(hl.total == 49);
  CHECK(hl.less == 49);
  CHECK(hl.greater == 0);
  CHECK(hl.undetermined == 0);
  CHECK(hl.branch == "i");
  CHECK(hl.dichotomy_ok());
}

TEST_CASE("lexicographic combination falls through ties, halts undetermined") {
  QualOracle all_equiv{
      [](const QSet&, const QSet&) { return CompareVerdict::Equiv; }, true,
      false};
  auto c1 = lex_combine({all_equiv, lexmax_oracle()});
  CHECK(c1.compare(QSet(ZSet::finite({1})), QSet(ZSet::finite({2}))) ==
        CompareVerdict::Less);
  auto c2 = lex_combine({cone_oracle(), lexmax_oracle()});
  CHECK(c2.compare(QSet(de()), QSet(sq())) == CompareVerdict::Undetermined);
  CHECK(c2.compare(QSet(ZSet::finite({5})), QSet(ZSet::finite({9}))) ==
        CompareVerdict::Less);
}

// ------------------------------------------------------------- integer sets

TEST_CASE("integer-set literals parse, render, and decide membership") {
  ZSet f = ZSet::parse("finite:[3,1]");
  CHECK(f.str() == "finite:[1,3]");
  CHECK(f.contains(1));
  CHECK(!f.contains(2));
  CHECK(f.size() == 2);
  CHECK(f.elements() == std::vector<long long>{1, 3});

  ZSet lm = ZSet::parse("Lm:0");
  CHECK(lm.contains(-1));
  CHECK(!lm.contains(0));
  ZSet rn = ZSet::parse("Rn:0");
  CHECK(rn.contains(0));
  CHECK(!rn.contains(-1));

  ZSet co = ZSet::parse("cofinite-ex:[0]");
  CHECK(co.contains(5));
  CHECK(!co.contains(0));

  ZSet d = ZSet::parse("sparse:double-exp");
  CHECK(d.contains(4));
  CHECK(d.contains(16));
  CHECK(d.contains(256));
  CHECK(d.contains(65536));
  CHECK(!d.contains(2));  // the catalog starts at 2^(2^1)
  CHECK(!d.contains(8));
  ZSet s = ZSet::parse("sparse:squares");
  CHECK(s.contains(1));
  CHECK(s.contains(9));
  CHECK(!s.contains(0));  // positive squares only
  CHECK(!s.contains(8));

  ZSet edited = ZSet::parse("Lm:0 add:[5] remove:[-3]");
  CHECK(edited.contains(5));
  CHECK(!edited.contains(-3));
  CHECK(edited.contains(-4));

  ZSet un = ZSet::parse("Lm:-1 | sparse:double-exp");
  CHECK(un.str() == "Lm:-1 | sparse:double-exp");
  CHECK(un.contains(-5));
  CHECK(un.contains(16));
  CHECK(!un.contains(3));

  CHECK(errc_of([] { ZSet::parse("nonsense"); }) == Errc::parse_error);
  CHECK(errc_of([] { ZSet::parse(""); }) == Errc::parse_error);
}

TEST_CASE("integer-set algebra is exact where representable") {
  ZSet a = ZSet::finite({1, 2, 3});
  ZSet b = ZSet::finite({3, 4});
  CHECK(ZSet::equal(ZSet::intersect(a, b), ZSet::finite({3})));
  CHECK(ZSet::equal(ZSet::unite(a, b), ZSet::finite({1, 2, 3, 4})));
  CHECK(ZSet::equal(*ZSet::difference(a, b), ZSet::finite({1, 2})));
  CHECK(ZSet::subset(ZSet::finite({1}), a));
  CHECK(!ZSet::subset(a, b));
  CHECK(ZSet::disjoint(ZSet::finite({9}), a));
  CHECK(ZSet::equal(*ZSet::finite({1}).complement(), ZSet::cofinite({1})));
  CHECK(ZSet::equal(a.translated(10), ZSet::finite({11, 12, 13})));
  CHECK(ZSet::equal(ZSet::half_left(0).translated(1), ZSet::half_left(1)));
  CHECK(ZSet::finite({}).is_empty());
  CHECK(!ZSet::half_left(0).is_finite());
  CHECK(ZSet::half_right(1).infinitely_many_positive());
  CHECK(!ZSet::half_left(0).infinitely_many_positive());
  CHECK(ZSet::unite(ZSet::half_left(0), ZSet::finite({3, 5}))
            .positive_elements() == std::vector<long long>{3, 5});
  CHECK(errc_of([] { de().positive_elements(); }) == Errc::invalid_argument);

  // squares minus double-exponentials: infinitely many removals, no
  // finite-edit representation; the reverse difference is empty since
  // every catalog double exponential is itself a square
  CHECK(!ZSet::difference(sq(), de()).has_value());
  CHECK(ZSet::difference(de(), sq())->is_empty());
}

// --------------------------------------------------------------------- cone

TEST_CASE("finitely supported functions convolve like polynomial products") {
  FinFn d2 = FinFn::delta(2);
  FinFn d3 = FinFn::delta(3);
  CHECK(convolve(d2, d3) == FinFn::delta(5));
  CHECK(convolve(d2, d3).str() == "{5:1}");
  FinFn f({{0, Rat(1)}, {1, Rat(-2)}});
  CHECK(convolve(f, FinFn::delta(0)) == f);
  CHECK(f.at(1) == Rat(-2));
  CHECK(f.at(7) == Rat(0));
  CHECK(f.sum() == Rat(-1));

  std::mt19937_64 rng(11);
  auto rand_fn = [&] {
    std::map<long long, Rat> m;
    for (int k = 0; k < 4; k++) {
      long long x = (long long)(rng() % 7) - 3;
      long long num = (long long)(rng() % 9) - 4;
      if (num != 0) m[x] = Rat(num, 1 + (long long)(rng() % 3));
    }
    return FinFn(m);
  };
  for (int t = 0; t < 50; t++) {
    FinFn a = rand_fn(), b = rand_fn(), c = rand_fn();
    CHECK(convolve(a, b) == convolve(b, a));
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    CHECK(convolve(a, b).sum() == a.sum() * b.sum());
  }
}

TEST_CASE("indicator differences split into disjoint plus and minus parts") {
  auto d = indicator_diff(ZSet::finite({1}), ZSet::finite({2}));
  CHECK(d.plus.str() == "finite:[2]");
  CHECK(d.minus.str() == "finite:[1]");
  CHECK(errc_of([] { indicator_diff(sq(), de()); }) ==
        Errc::unsupported_shape);

  CHECK(has_X1(indicator_diff(ZSet::finite({}), ZSet::finite({1}))));
  CHECK(!has_X1(indicator_diff(ZSet::finite({1}), ZSet::finite({}))));
  CHECK(has_X2(indicator_diff(ZSet::half_left(0), ZSet::half_right(0))));
  CHECK(!has_X2(indicator_diff(ZSet::half_right(0), ZSet::half_left(0))));
}

TEST_CASE("the decidable cone order matches the frozen desk verdicts") {
  CHECK(c0_compare(ZSet::half_left(-1), de()) == CompareVerdict::Less);
  CHECK(c0_compare(de(), sq()) == CompareVerdict::Undetermined);
  CHECK(c0_compare(ZSet::finite({5}), ZSet::finite({9})) ==
        CompareVerdict::Equiv);
  CHECK(c0_compare(ZSet::half_left(2), ZSet::half_right(-2)) ==
        CompareVerdict::Less);
  CHECK(c0_compare(ZSet::cofinite({3}), ZSet::cofinite({4})) ==
        CompareVerdict::Equiv);
}

TEST_CASE("gamma takes exact counting values on finite arguments") {
  auto val = [](const ZSet& a, const ZSet& b) {
    return gamma_indicator(a, b).str();
  };
  CHECK(val(ZSet::finite({5}), ZSet::finite({5, 9})) == "1/2");
  CHECK(val(ZSet::finite({5}), ZSet::finite({9})) == "1");
  CHECK(val(ZSet::finite({}), ZSet::finite({9})) == "0");
  CHECK(val(ZSet::finite({5}), ZSet::finite({})) == "inf");
  CHECK(val(ZSet::finite({}), ZSet::finite({})) == "undefined");
  CHECK(gamma_indicator(de(), sq()).kind ==
        GammaResult::Kind::Undetermined);
}

TEST_CASE("gamma satisfies additivity and the cocycle law where determined") {
  auto lr = gamma_law_check(ZSet::finite({1, 2}), ZSet::finite({3}),
                            ZSet::finite({1, 2, 3, 4}));
  CHECK(lr.pass());
  CHECK(lr.laws_checked() == 2);
  CHECK(lr.additivity_ok);
  CHECK(lr.cocycle_ok);
  CHECK(lr.additivity_detail.find("union 3/4 vs parts 1/2 + 1/4") !=
        std::string::npos);
  CHECK(lr.cocycle_detail.find("direct 1/2 vs chain 2 * 1/4") !=
        std::string::npos);

  auto vac = gamma_law_check(de(), sq(), ZSet::cofinite({}));
  CHECK(vac.pass());
  CHECK(vac.laws_checked() == 0);  // nothing determinable, nothing checked
}

TEST_CASE("the skew conditional favors the sparse positives over negatives") {
  ZSet neg = ZSet::half_left(-1);
  ZSet join = ZSet::unite(neg, de());
  auto s1 = skew_popper(neg, join);
  REQUIRE(s1.determined);
  CHECK(s1.value == Rat(0));
  auto s2 = skew_popper(de(), join);
  REQUIRE(s2.determined);
  CHECK(s2.value == Rat(1));
  auto s3 = skew_popper(ZSet::finite({5}), ZSet::finite({5, 9}));
  REQUIRE(s3.determined);
  CHECK(s3.value == Rat(1, 2));
  auto s4 = skew_popper(de(), ZSet::unite(de(), sq()));
  CHECK(!s4.determined);
}

// ------------------------------------------------------------------ reports

TEST_CASE("reports render deterministically in text and json") {
  Report r;
  r.title = "demo";
  r.has_seed = true;
  r.seed = 7;
  r.add({"alpha", Outcome::Pass, "4", "four points", "4", true, ""});
  r.add({"beta", Outcome::Cited, "no", "", "", true, "Somebody (1999)"});
  r.add({"gam", Outcome::Undetermined, "?", "oracle silent", "", true, ""});
  CHECK(r.text() ==
        "== demo (seed 7) ==\n"
        "[pass] alpha: 4 (matches expected 4) -- four points\n"
        "[cited] beta: no [Somebody (1999)]\n"
        "[undetermined] gam: ? -- oracle silent\n"
        "-- 3 checks: 1 pass, 0 fail, 1 undetermined, 0 info, 1 cited, "
        "0 error; overall OK --\n");
  CHECK(r.json().find("\"outcome\": \"cited\"") != std::string::npos);
  CHECK(r.json().find("\"citation\": \"Somebody (1999)\"") !=
        std::string::npos);
  CHECK(r.json().find("\"ok\": true") != std::string::npos);
  CHECK(r.count(Outcome::Pass) == 1);
  CHECK(r.count(Outcome::Fail) == 0);
  CHECK(r.ok(false));
  CHECK(!r.ok(true));  // undetermined blocks strict

  Report bad;
  bad.add({"x", Outcome::Pass, "1", "", "2", false, ""});
  CHECK(!bad.ok(false));  // pinned expectation missed
  Report err;
  err.add({"x", Outcome::Error, "boom", "", "", true, ""});
  CHECK(!err.ok(false));
}

TEST_CASE("outcome names are stable") {
  CHECK(std::string(outcome_str(Outcome::Pass)) == "pass");
  CHECK(std::string(outcome_str(Outcome::Cited)) == "cited");
  CHECK(std::string(outcome_str(Outcome::Undetermined)) == "undetermined");
}

// ---------------------------------------------------------------- scenarios

TEST_CASE("scenario parsing rejects malformed input and unknown checks") {
  CHECK(errc_of([] { parse_scenario("{nope"); }) == Errc::parse_error);
  CHECK(errc_of([] {
          parse_scenario(R"({"name":"x","space":"integers",
                            "generators":[],
                            "checks":[{"check":"no-such-check"}]})");
        }) == Errc::unknown_check);
}

TEST_CASE("the bundled gallery runs strictly clean") {
  auto names = bundled_scenario_names();
  CHECK(names == std::vector<std::string>{
                     "finite-space", "coin-reversals", "integer-lottery",
                     "interval-translations", "coin-shift-paradox"});
  auto rep = run_scenario(bundled_scenario("finite-space"), 1);
  CHECK(rep.title == "finite-space");
  CHECK(rep.checks.size() == 9);
  CHECK(rep.ok(true));
  for (auto& c : rep.checks) CHECK(c.outcome == Outcome::Pass);
  CHECK(errc_of([] { bundled_scenario_text("nope"); }) ==
        Errc::invalid_argument);
}

TEST_CASE("shipped scenario files match the compiled-in texts byte for byte") {
  for (auto& name : bundled_scenario_names()) {
    std::ifstream in(std::string(SCENARIOS_DIR) + "/" + name + ".json",
                     std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == bundled_scenario_text(name));
  }
}

TEST_CASE("pinned expectations decide pass or fail") {
  auto rep = run_scenario(parse_scenario(
      R"({"name":"t","space":"integers",
          "generators":[{"translate":"1"}],
          "checks":[{"check":"orbit-closure","start":0,"budget":5,
                     "expect":"budget-exceeded"},
                    {"check":"orbit-closure","start":0,"budget":5,
                     "expect":"finite:5"}]})"));
  REQUIRE(rep.checks.size() == 2);
  CHECK(rep.checks[0].outcome == Outcome::Pass);
  CHECK(rep.checks[1].outcome == Outcome::Fail);
  CHECK(!rep.checks[1].expected_match);
  CHECK(!rep.ok(false));
}

TEST_CASE("a thrown check becomes its error name, matchable by expect") {
  auto rep = run_scenario(parse_scenario(
      R"({"name":"t","space":{"explicit":[0,1]},
          "generators":[],
          "checks":[{"check":"orbit-closure","start":9,
                     "expect":"invalid-argument"}]})"));
  CHECK(rep.checks[0].outcome == Outcome::Pass);
  CHECK(rep.checks[0].value == "invalid-argument");

  auto rep2 = run_scenario(parse_scenario(
      R"({"name":"t","space":{"explicit":[0,1]},
          "generators":[],
          "checks":[{"check":"orbit-closure","start":9}]})"));
  CHECK(rep2.checks[0].outcome == Outcome::Error);
  CHECK(!rep2.ok(false));
}

TEST_CASE("unpinned measurements report info, undetermined oracles surface") {
  auto rep = run_scenario(parse_scenario(
      R"({"name":"t","space":"integers","generators":[],
          "checks":[{"check":"gamma","a":"finite:[5]","b":"finite:[5,9]"},
                    {"check":"gamma","a":"sparse:double-exp",
                     "b":"sparse:squares"}]})"));
  CHECK(rep.checks[0].outcome == Outcome::Info);
  CHECK(rep.checks[0].value == "1/2");
  CHECK(rep.checks[1].outcome == Outcome::Undetermined);
  CHECK(rep.ok(false));
  CHECK(!rep.ok(true));
}
