// Go/no-go acceptance sweep: ten criteria, one [PASS]/[FAIL] line each,
// nonzero exit when anything fails. Every numeric comparison is exact; each
// criterion also enforces its own wall-clock budget.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "invprob/action.hpp"
#include "invprob/cone.hpp"
#include "invprob/equidecomp.hpp"
#include "invprob/error.hpp"
#include "invprob/measures.hpp"
#include "invprob/popper.hpp"
#include "invprob/qual.hpp"
#include "invprob/report.hpp"
#include "invprob/scenario.hpp"
#include "invprob/zset.hpp"

using namespace invprob;

namespace {

int g_failures = 0;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

void run_criterion(const char* name, double limit_s,
                   const std::function<void(Verdict&)>& body) {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("threw: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  if (v.ok && secs > limit_s) {
    v.ok = false;
    v.detail = "over time budget";
  }
  std::printf("[%s] %s: %s (%.2fs, limit %.0fs)\n", v.ok ? "PASS" : "FAIL",
              name, v.detail.c_str(), secs, limit_s);
  std::fflush(stdout);
  if (!v.ok) g_failures++;
}

Point ip(long long n) { return Point::of_int(n); }

ZSet de_catalog() { return ZSet::sparse(ZSet::SparseKind::DoubleExp); }

// One randomly shaped finite action: either a permuted set (components are
// the permutation's cycles) or two translation-linked blocks, where a
// first-block stage chooser produces a depth-two stack.
struct SweepInstance {
  std::vector<Point> omega;
  std::vector<Generator> gens;
  StageChooser chooser;  // null = canonical
};

StageChooser first_block_chooser() {
  return [](const std::vector<Point>& om, const std::vector<Generator>& gs,
            const std::vector<Point>& e) {
    auto cs = move_components(om, gs);
    std::vector<Point> cut;
    for (auto& x : e)
      for (auto& y : cs[0])
        if (x == y) cut.push_back(x);
    if (cut.empty()) cut = e;
    return invariant_unit_measure(om, gs, cut);
  };
}

SweepInstance random_instance(std::mt19937_64& rng) {
  SweepInstance inst;
  if (rng() % 2 == 0) {
    std::size_t n = 2 + rng() % 5;  // 2..6
    std::vector<long long> tgt(n);
    for (std::size_t i = 0; i < n; i++) tgt[i] = (long long)i;
    std::shuffle(tgt.begin(), tgt.end(), rng);
    PermutationTable t;
    for (std::size_t i = 0; i < n; i++) {
      inst.omega.push_back(ip((long long)i));
      t.pairs.push_back({ip((long long)i), ip(tgt[i])});
    }
    inst.gens.push_back(t);
    if (rng() % 2 == 0) {
      std::shuffle(tgt.begin(), tgt.end(), rng);
      PermutationTable t2;
      for (std::size_t i = 0; i < n; i++)
        t2.pairs.push_back({ip((long long)i), ip(tgt[i])});
      inst.gens.push_back(t2);
    }
  } else {
    std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3;
    for (std::size_t i = 0; i < a; i++) inst.omega.push_back(ip((long long)i));
    for (std::size_t i = 0; i < b; i++)
      inst.omega.push_back(ip(10 + (long long)i));
    inst.gens.push_back(TranslateRational{Rat(1)});
    inst.chooser = first_block_chooser();
  }
  return inst;
}

std::vector<SweepInstance> make_sweep(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<SweepInstance> out;
  for (std::size_t i = 0; i < count; i++) out.push_back(random_instance(rng));
  return out;
}

bool tables_equal(const PopperTable& a, const PopperTable& b) {
  std::uint32_t full = a.algebra().full_mask();
  if (b.algebra().full_mask() != full) return false;
  for (std::uint32_t bm = 1; bm <= full; bm++)
    for (std::uint32_t am = 0; am <= full; am++)
      if (!(a.at(am, bm) == b.at(am, bm))) return false;
  return true;
}

// Perfect-matching existence by exhaustive recursion, independent of the
// production matcher.
bool brute_equidecomposable(const std::vector<Point>& a,
                            const std::vector<Point>& b,
                            const std::vector<GroupWord>& moves,
                            const std::vector<Generator>& gens,
                            const SpaceSpec& omega) {
  if (a.size() != b.size()) return false;
  std::size_t n = a.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; i++)
    for (auto& w : moves) {
      Point img = apply_word(w, a[i], gens);
      if (!omega.contains(img)) continue;
      for (std::size_t j = 0; j < n; j++)
        if (img == b[j]) adj[i][j] = true;
    }
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; j++)
      if (adj[i][j] && !used[j]) {
        used[j] = true;
        if (rec(i + 1)) return true;
        used[j] = false;
      }
    return false;
  };
  return rec(0);
}

void criterion_exchange_round_trip(Verdict& v) {
  auto sweep = make_sweep(1, 56);
  std::size_t deep = 0;
  for (auto& inst : sweep) {
    FinAlgebra f = FinAlgebra::powerset(inst.omega);
    auto st = build_level_stack(inst.omega, inst.gens, f, inst.chooser);
    if (st.depth() > 1) deep++;
    PopperTable p = popper_from_levels(st);
    PopperTable rt = popper_from_exchange(exchange_from_popper(p));
    v.require(tables_equal(p, rt), "round trip changed an entry");
  }
  v.require(sweep.size() >= 50, "sweep too small");
  v.require(deep > 0, "no multi-level stack exercised");
  std::ostringstream os;
  os << sweep.size() << " random tables identical after the round trip ("
     << deep << " with depth 2)";
  v.detail = os.str();
}

void criterion_stack_verification(Verdict& v) {
  std::size_t ran = 0;
  for (auto& name : bundled_scenario_names()) {
    Scenario sc = bundled_scenario(name);
    auto* ex = std::get_if<SpaceExplicit>(&sc.space.region);
    if (!ex) continue;
    std::vector<Point> omega(ex->points.begin(), ex->points.end());
    FinAlgebra f = FinAlgebra::powerset(omega);
    auto st = build_level_stack(omega, sc.generators, f);
    PopperTable p = popper_from_levels(st);
    auto law = verify_popper_axioms(p);
    v.require(law.violations.empty(), name + ": axiom violation");
    v.require(law.sampled == 0, name + ": sweep was not exhaustive");
    auto inv = verify_strong_invariance_popper(p, sc.generators);
    v.require(inv.violations.empty(), name + ": invariance violation");
    ran++;
  }
  v.require(ran >= 2, "fewer than two finite scenarios found");
  std::ostringstream os;
  os << ran << " bundled finite scenarios verified exhaustively";
  v.detail = os.str();
}

void criterion_invariance_transfer(Verdict& v) {
  auto sweep = make_sweep(1, 56);
  std::size_t invariant = 0, noninvariant = 0;
  auto check_pair = [&](const PopperTable& p,
                        const std::vector<Generator>& gens) {
    bool pi = verify_strong_invariance_popper(p, gens).pass();
    bool ci =
        verify_strong_invariance_exchange(exchange_from_popper(p), gens)
            .pass();
    v.require(pi == ci, "transfer mismatch between table and rates");
    (pi ? invariant : noninvariant)++;
  };
  for (auto& inst : sweep) {
    FinAlgebra f = FinAlgebra::powerset(inst.omega);
    auto st = build_level_stack(inst.omega, inst.gens, f, inst.chooser);
    check_pair(popper_from_levels(st), inst.gens);
  }
  // a deliberately lopsided table, to hit the negative side of the
  // equivalence as well
  {
    FinAlgebra f = FinAlgebra::powerset({ip(0), ip(1)});
    Measure mu({ip(0), ip(1)}, {ExtRat(Rat(1, 3)), ExtRat(Rat(2, 3))});
    std::vector<std::vector<Rat>> e(4, std::vector<Rat>(4, Rat(0)));
    for (std::uint32_t b = 1; b <= 3; b++)
      for (std::uint32_t a = 0; a <= 3; a++)
        e[b][a] = mu.eval_mask(f, a & b).finite_value() /
                  mu.eval_mask(f, b).finite_value();
    PermutationTable sw;
    sw.pairs = {{ip(0), ip(1)}, {ip(1), ip(0)}};
    check_pair(PopperTable(f, e), {Generator(sw)});
  }
  v.require(noninvariant > 0, "no non-invariant pair exercised");
  std::ostringstream os;
  os << invariant + noninvariant << " pairs agree (" << invariant
     << " invariant, " << noninvariant << " not)";
  v.detail = os.str();
}

void criterion_ray_witnesses(Verdict& v) {
  std::vector<Generator> gens = {TranslateQuad{Quad{Rat(0), 1}},
                                 TranslateRational{Rat(-1, 2)}};
  std::vector<GroupWord> moves = {GroupWord::single(0), GroupWord::single(1)};
  SpaceSpec unit = SpaceSpec::interval(Rat(0), Rat(1));

  auto ray = unit_interval_ray(1000);
  std::set<Point> distinct(ray.begin(), ray.end());
  v.require(ray.size() == 1001 && distinct.size() == 1001,
            "ray points not pairwise distinct");
  auto cl = orbit_closure(ip(0), moves, gens, unit, 800);
  v.require(!closure_is_finite(cl), "interval closure unexpectedly finite");

  auto prefix = unit_interval_ray(49);
  auto rp = ray_decomposition(prefix, moves, gens);
  std::size_t total = 0;
  for (auto& piece : rp.pieces) {
    v.require(!piece.empty() && piece.size() < prefix.size(),
              "piece is not a proper nonempty part");
    total += piece.size();
  }
  v.require(total == prefix.size() - 1, "pieces miss a ray step");

  // ten-coordinate reversal action: finite closures carrying an invariant
  // stage measure
  std::vector<Generator> rev;
  std::vector<GroupWord> rmoves;
  for (int i = 0; i < 10; i++) {
    rev.push_back(ReverseMask{Bits{i}});
    rmoves.push_back(GroupWord::single(i));
  }
  SpaceSpec all = SpaceSpec::all();
  auto rc = orbit_closure(Point::of_bits({}), rmoves, rev, all, 2000);
  v.require(closure_is_finite(rc), "reversal closure not finite");
  v.require(closure_points(rc).size() == 1024, "reversal closure size");

  NetIndex full;
  full.moves = rmoves;
  full.seeds = {Point::of_bits({})};
  auto support = net_stage_support(full, rev, all, 4000);
  v.require(support.size() == 1024, "stage support size");
  v.require(net_stage_measure(full, support, rev, all, 4000) == Rat(1),
            "stage mass is not one");

  NetIndex half;
  half.moves = {rmoves.begin(), rmoves.begin() + 5};
  half.seeds = {Point::of_bits({})};
  std::mt19937_64 rng(4);
  Rat sum(0);
  for (int t = 0; t < 8; t++) {
    const Point& x = support[rng() % support.size()];
    Rat mx = net_stage_measure(full, {x}, rev, all, 4000);
    v.require(mx == Rat(1, 1024), "singleton weight is not uniform");
    sum += mx;
    for (auto& g : rev) {
      Point gx = apply_gen(g, x);
      v.require(net_stage_measure(full, {gx}, rev, all, 4000) == mx,
                "full stage not invariant under its moves");
    }
    Rat hx = net_stage_measure(half, {x}, rev, all, 4000);
    for (int i = 0; i < 5; i++) {
      Point gx = apply_gen(rev[i], x);
      v.require(net_stage_measure(half, {gx}, rev, all, 4000) == hx,
                "half stage not invariant under its moves");
    }
  }
  v.require(sum == Rat(8, 1024), "sampled singleton masses inconsistent");
  std::ostringstream os;
  os << "1001 distinct ray values, closure over budget, " << rp.pieces.size()
     << " ray pieces, 1024-point reversal net invariant";
  v.detail = os.str();
}

void criterion_matching_oracle(Verdict& v) {
  std::mt19937_64 rng(5);
  SpaceSpec ints = SpaceSpec::integers();
  std::size_t found = 0, absent = 0;
  for (int t = 0; t < 1000; t++) {
    std::size_t n = 1 + rng() % 6;
    auto pick_set = [&] {
      std::set<long long> s;
      while (s.size() < n) s.insert((long long)(rng() % 17) - 8);
      std::vector<Point> out;
      for (long long x : s) out.push_back(ip(x));
      return out;
    };
    std::vector<Point> a = pick_set(), b = pick_set();
    std::size_t k = 1 + rng() % 3;
    std::vector<Generator> gens;
    std::vector<GroupWord> moves;
    std::vector<long long> steps;
    for (std::size_t i = 0; i < k; i++) {
      long long step = (long long)(rng() % 8) - 4;
      if (step == 0) step = 4;
      steps.push_back(step);
      gens.push_back(TranslateRational{Rat(step)});
      moves.push_back(GroupWord::single((int)i));
      if (rng() % 2 == 0) moves.push_back(GroupWord::single((int)i, -1));
    }
    if (rng() % 2 == 0) {
      // piecewise-translated copy of a: positives with nontrivial matchings
      std::set<long long> img;
      for (auto& x : a) img.insert(x.as_int() + steps[rng() % k]);
      if (img.size() == a.size()) {
        b.clear();
        for (long long y : img) b.push_back(ip(y));
      }
    }
    auto w = equidecomposable(a, b, moves, gens, ints);
    bool expected = brute_equidecomposable(a, b, moves, gens, ints);
    v.require(w.has_value() == expected, "matcher disagrees with brute force");
    if (w) {
      v.require(verify_witness(a, b, *w, gens, ints).ok,
                "produced witness fails verification");
      found++;
    } else {
      absent++;
    }
  }
  std::ostringstream os;
  os << "1000 instances agree with brute force (" << found << " witnesses, "
     << absent << " none)";
  v.detail = os.str();
}

void criterion_largest_element_order(Verdict& v) {
  QualOracle o;
  o.claims_total = true;
  o.claims_regular = true;
  o.compare = [](const QSet& a, const QSet& b) {
    return lexmax_compare(std::get<ZSet>(a), std::get<ZSet>(b));
  };
  std::mt19937_64 rng(6);
  auto rand_zset = [&] {
    if (rng() % 4 == 0) {
      std::vector<long long> ex;
      std::size_t m = rng() % 3;
      for (std::size_t i = 0; i < m; i++)
        ex.push_back((long long)(rng() % 21) - 10);
      return ZSet::cofinite(ex);
    }
    std::vector<long long> el;
    std::size_t m = rng() % 6;
    for (std::size_t i = 0; i < m; i++)
      el.push_back((long long)(rng() % 21) - 10);
    return ZSet::finite(el);
  };
  std::size_t triples = 0;
  auto moves = translation_moves({1, -1});
  for (int batch = 0; batch < 3; batch++) {
    std::vector<QSet> family;
    for (int i = 0; i < 12; i++) family.push_back(QSet(rand_zset()));
    auto ax = verify_qual_axioms(o, family);
    v.require(ax.pass(), "qualitative axiom violated");
    v.require(ax.undetermined_count == 0, "order was not total");
    triples += ax.checked;
    auto weak = verify_weak_invariance_qual(o, moves, family);
    v.require(weak.pass(), "weak invariance violated");
    auto strong = verify_strong_invariance_qual(o, moves, family);
    v.require(strong.violation_count > 0, "strong invariance did not fail");
  }
  v.require(triples >= 500, "fewer than 500 random checks");
  for (int t = 0; t < 10; t++) {
    long long a = (long long)(rng() % 21) - 10;
    v.require(lexmax_compare(ZSet::finite({a}), ZSet::finite({a + 1})) ==
                  CompareVerdict::Less,
              "witness pair {a} vs {a+1} not strictly increasing");
  }
  std::ostringstream os;
  os << triples
     << " axiom checks pass, weak invariance holds, strong fails on {a},{a+1}";
  v.detail = os.str();
}

void criterion_halfline_sweep(Verdict& v) {
  std::size_t hits = 0;
  for (long long m = -5; m <= 5; m++)
    for (long long n = -5; n <= 5; n++) {
      if (c0_compare(ZSet::half_left(m), ZSet::half_right(n)) ==
          CompareVerdict::Less)
        hits++;
      else
        v.require(false, "a half-line pair was not Less");
    }
  auto hl = halfline_dichotomy_check(cone_oracle(), -5, 5, -5, 5);
  v.require(hl.total == 121 && hl.less == 121 && hl.branch == "i",
            "dichotomy sweep disagrees");
  std::ostringstream os;
  os << hits << "/121 half-line pairs Less, branch (i) realized";
  v.detail = os.str();
}

void criterion_singleton_equivalence(Verdict& v) {
  std::size_t hits = 0;
  for (long long n = -5; n <= 5; n++)
    for (long long m = -5; m <= 5; m++) {
      if (c0_compare(ZSet::finite({n}), ZSet::finite({m})) ==
          CompareVerdict::Equiv)
        hits++;
      else
        v.require(false, "a singleton pair was not Equiv");
    }
  v.require(c0_compare(ZSet::half_left(0), de_catalog()) ==
                CompareVerdict::Less,
            "negatives vs double exponentials not Less");
  std::ostringstream os;
  os << hits << "/121 singleton pairs Equiv; negatives below double-exp";
  v.detail = os.str();
}

void criterion_conditional_values(Verdict& v) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; t++) {
    long long m = (long long)(rng() % 21) - 10;
    long long n = (long long)(rng() % 21) - 10;
    if (n == m) n += 1;
    auto s = skew_popper(ZSet::finite({m}), ZSet::finite({m, n}));
    v.require(s.determined && s.value == Rat(1, 2),
              "singleton conditional is not 1/2");
  }
  ZSet neg = ZSet::half_left(0);
  ZSet join = ZSet::unite(neg, de_catalog());
  auto lo = skew_popper(neg, join);
  auto hi = skew_popper(de_catalog(), join);
  v.require(lo.determined && lo.value == Rat(0), "negatives given union != 0");
  v.require(hi.determined && hi.value == Rat(1), "sparse given union != 1");

  std::size_t checked = 0;
  for (int t = 0; t < 500 && checked < 100; t++) {
    std::set<long long> pool;
    while (pool.size() < 6) pool.insert((long long)(rng() % 13) - 6);
    std::vector<long long> pts(pool.begin(), pool.end());
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<long long> a(pts.begin(), pts.begin() + 2);
    std::vector<long long> b(pts.begin() + 2, pts.begin() + 4);
    std::vector<long long> d(pts.begin(), pts.end());
    auto lr = gamma_law_check(ZSet::finite(a), ZSet::finite(b),
                              ZSet::finite(d));
    if (lr.laws_checked() != 2) continue;
    v.require(lr.pass(), "a gamma law failed on a determined triple");
    checked++;
  }
  v.require(checked >= 100, "fewer than 100 determined triples");
  std::ostringstream os;
  os << "20 conditionals at 1/2, skew endpoints 0 and 1, " << checked
     << " gamma-law triples pass";
  v.detail = os.str();
}

void criterion_catalog(Verdict& v) {
  // per row: the three cell verdicts, machine-checked (m) or cited (c)
  struct Row {
    const char* cells;  // full-conditional, stage-net, qualitative
  };
  const Row rows[15] = {
      {"my my my"},  // finite space
      {"cy mn mn"},  // integer lottery, translations
      {"cy mn mn"},  // integer lottery, reflections
      {"cn cn cn"},  // integer lottery, all permutations
      {"my my my"},  // finitary permutations
      {"cy mn mn"},  // coin shifts
      {"mn mn mn"},  // coin shifts + reversals
      {"cn cn cn"},  // coin permutations
      {"my my my"},  // subset reversals
      {"cy mn mn"},  // unit interval
      {"cy mn mn"},  // circle rotations
      {"cn cn cn"},  // sphere
      {"cn cn cn"},  // cube subset
      {"cy mn mn"},  // euclidean translations
      {"cy mn mn"},  // translations + reflections
  };
  Report rep = run_table(1);
  v.require(rep.checks.size() == 45, "catalog is not 15 x 3 cells");
  v.require(rep.ok(true), "catalog reports a failure");
  for (std::size_t i = 0; i < rep.checks.size() && v.ok; i++) {
    const CheckResult& c = rep.checks[i];
    const char* cell = rows[i / 3].cells + 3 * (i % 3);
    Outcome want_outcome = cell[0] == 'm' ? Outcome::Pass : Outcome::Cited;
    std::string want_value = cell[1] == 'y' ? "yes" : "no";
    v.require(c.outcome == want_outcome, c.name + ": wrong outcome kind");
    v.require(c.value == want_value, c.name + ": wrong verdict");
    if (want_outcome == Outcome::Cited)
      v.require(!c.citation.empty(), c.name + ": citation missing");
  }
  int rc = std::system(INVPROB_CLI_PATH " table > /dev/null 2>&1");
  v.require(rc == 0, "cli table run exited nonzero");
  v.detail = "45 cells match the published verdicts; cli exits clean";
}

}  // namespace

int main() {
  run_criterion("exchange-round-trip", 10, criterion_exchange_round_trip);
  run_criterion("stack-verification", 30, criterion_stack_verification);
  run_criterion("invariance-transfer", 10, criterion_invariance_transfer);
  run_criterion("ray-witnesses", 10, criterion_ray_witnesses);
  run_criterion("matching-oracle", 60, criterion_matching_oracle);
  run_criterion("largest-element-order", 10, criterion_largest_element_order);
  run_criterion("halfline-sweep", 10, criterion_halfline_sweep);
  run_criterion("singleton-equivalence", 10, criterion_singleton_equivalence);
  run_criterion("conditional-values", 10, criterion_conditional_values);
  run_criterion("catalog", 120, criterion_catalog);
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures ? 1 : 0;
}
