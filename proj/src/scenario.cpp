#include "invprob/scenario.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "invprob/action.hpp"
#include "invprob/cone.hpp"
#include "invprob/error.hpp"
#include "invprob/measures.hpp"
#include "invprob/popper.hpp"
#include "invprob/qual.hpp"
#include "invprob/zset.hpp"

namespace invprob {

namespace {

using Json = nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { fail(Errc::parse_error, msg); }

Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON in " + what);
  return j;
}

Rat parse_rat_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  bad(what + ": expected an integer or a \"p/q\" string");
}

long long parse_ll(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + ": expected an integer");
  return j.get<long long>();
}

Point parse_point(const Json& j) {
  if (j.is_number_integer()) return Point::of_int(j.get<long long>());
  if (j.is_string()) {
    Rat r = parse_rat(j.get<std::string>());
    if (is_integer(r)) return Point::of_int(numerator(r).convert_to<long long>());
    return Point::of_quad(Quad{r, 0});
  }
  if (j.is_object()) {
    if (j.contains("quad")) {
      const Json& q = j["quad"];
      if (!q.is_array() || q.size() != 2) bad("quad point needs [p, q]");
      return Point::of_quad(Quad{parse_rat_json(q[0], "quad p"),
                                 parse_ll(q[1], "quad q")});
    }
    if (j.contains("bits")) {
      Bits b;
      for (const Json& e : j["bits"]) b.push_back(parse_ll(e, "bits entry"));
      return Point::of_bits(std::move(b));
    }
  }
  bad("unrecognized point literal: " + j.dump());
}

std::vector<Point> parse_points(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + ": expected an array of points");
  std::vector<Point> out;
  for (const Json& e : j) out.push_back(parse_point(e));
  return out;
}

Generator parse_generator(const Json& j) {
  if (j.is_object()) {
    if (j.contains("translate"))
      return TranslateRational{parse_rat_json(j["translate"], "translate")};
    if (j.contains("translate-quad")) {
      const Json& q = j["translate-quad"];
      if (!q.is_array() || q.size() != 2) bad("translate-quad needs [p, q]");
      return TranslateQuad{Quad{parse_rat_json(q[0], "translate-quad p"),
                                parse_ll(q[1], "translate-quad q")}};
    }
    if (j.contains("shift")) return Shift{parse_ll(j["shift"], "shift")};
    if (j.contains("reverse")) {
      Bits mask;
      for (const Json& e : j["reverse"])
        mask.push_back(parse_ll(e, "reverse coordinate"));
      std::sort(mask.begin(), mask.end());
      mask.erase(std::unique(mask.begin(), mask.end()), mask.end());
      return ReverseMask{std::move(mask)};
    }
    if (j.contains("permutation")) {
      PermutationTable t;
      for (const Json& e : j["permutation"]) {
        if (!e.is_array() || e.size() != 2) bad("permutation pair needs [x, y]");
        t.pairs.emplace_back(parse_point(e[0]), parse_point(e[1]));
      }
      return t;
    }
  }
  bad("unrecognized generator: " + j.dump());
}

SpaceSpec parse_space(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "integers") return SpaceSpec::integers();
    if (s == "all") return SpaceSpec::all();
    bad("unrecognized space \"" + s + "\"");
  }
  if (j.is_object()) {
    if (j.contains("interval")) {
      const Json& iv = j["interval"];
      if (!iv.is_array() || iv.size() != 2) bad("interval needs [lo, hi]");
      std::string open = j.value("open", "none");
      bool lo_open = open == "lo" || open == "both";
      bool hi_open = open == "hi" || open == "both";
      return SpaceSpec::interval(parse_rat_json(iv[0], "interval lo"),
                                 parse_rat_json(iv[1], "interval hi"), lo_open,
                                 hi_open);
    }
    if (j.contains("explicit")) {
      std::set<Point> pts;
      for (const Json& e : j["explicit"]) pts.insert(parse_point(e));
      return SpaceSpec::explicit_set(std::move(pts));
    }
  }
  bad("unrecognized space: " + j.dump());
}

GroupWord parse_word(const Json& j, std::size_t ngens) {
  GroupWord w;
  if (j.is_number_integer()) {
    long long g = j.get<long long>();
    if (g < 0 || std::size_t(g) >= ngens) bad("word references generator out of range");
    return GroupWord::single(int(g));
  }
  if (!j.is_array()) bad("word must be an array of [generator, sign] letters");
  for (const Json& e : j) {
    if (e.is_number_integer()) {
      long long g = e.get<long long>();
      if (g < 0 || std::size_t(g) >= ngens) bad("word references generator out of range");
      w.letters.emplace_back(int(g), 1);
      continue;
    }
    if (!e.is_array() || e.size() != 2) bad("word letter needs [generator, sign]");
    long long g = parse_ll(e[0], "letter generator");
    long long s = parse_ll(e[1], "letter sign");
    if (g < 0 || std::size_t(g) >= ngens) bad("word references generator out of range");
    if (s != 1 && s != -1) bad("letter sign must be 1 or -1");
    w.letters.emplace_back(int(g), int(s));
  }
  return w;
}

std::vector<GroupWord> parse_moves(const Json& params, std::size_t ngens) {
  std::vector<GroupWord> moves;
  if (params.contains("moves")) {
    for (const Json& e : params["moves"]) moves.push_back(parse_word(e, ngens));
  } else {
    for (std::size_t i = 0; i < ngens; ++i) moves.push_back(GroupWord::single(int(i)));
  }
  return moves;
}

ZSet parse_zset_json(const Json& j, const std::string& what) {
  if (!j.is_string()) bad(what + ": expected a set literal string");
  return ZSet::parse(j.get<std::string>());
}

FinFn parse_finfn(const Json& j, const std::string& what) {
  if (!j.is_object()) bad(what + ": expected {\"x\": value} pairs");
  std::map<long long, Rat> vals;
  for (auto it = j.begin(); it != j.end(); ++it) {
    long long x = 0;
    try {
      x = std::stoll(it.key());
    } catch (...) {
      bad(what + ": key \"" + it.key() + "\" is not an integer");
    }
    vals[x] = parse_rat_json(it.value(), what + " value");
  }
  return FinFn(vals);
}

std::string join_points(const std::vector<Point>& pts, std::size_t cap = 8) {
  std::string s;
  for (std::size_t i = 0; i < pts.size() && i < cap; ++i) {
    if (i) s += ", ";
    s += pts[i].str();
  }
  if (pts.size() > cap) s += ", ...";
  return s;
}

// ---- check context and handlers ----------------------------------------

struct Ctx {
  const Scenario* sc = nullptr;
  Json params;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget_override;

  std::uint64_t budget(std::uint64_t dflt) const {
    if (budget_override) return *budget_override;
    if (params.contains("budget"))
      return params["budget"].get<std::uint64_t>();
    return dflt;
  }
  const std::vector<Generator>& gens() const { return sc->generators; }
  const SpaceSpec& space() const { return sc->space; }
};

struct CheckOutcome {
  std::string value;
  std::string detail;
  std::optional<bool> verdict;  // set for verifier checks, empty for measurements
  bool undetermined = false;    // measurement outside the decidable fragment
};

std::vector<Point> explicit_points(const SpaceSpec& s) {
  const auto* ex = std::get_if<SpaceExplicit>(&s.region);
  if (!ex)
    fail(Errc::invalid_argument,
         "this check needs an explicit finite space");
  return {ex->points.begin(), ex->points.end()};
}

std::vector<Point> sample_points(const Ctx& c, const char* key) {
  if (c.params.contains(key)) return parse_points(c.params[key], key);
  return explicit_points(c.space());
}

CheckOutcome run_axioms(const Ctx& c) {
  auto sample = sample_points(c, "sample");
  AxiomReport rep = check_partial_action_axioms(c.space(), c.gens(), sample);
  CheckOutcome o;
  o.verdict = rep.pass();
  o.value = rep.pass() ? "pass" : "fail";
  for (std::size_t i = 0; i < rep.violations.size() && i < 3; ++i) {
    if (i) o.detail += "; ";
    o.detail += rep.violations[i].axiom + ": " + rep.violations[i].detail;
  }
  if (o.detail.empty())
    o.detail = "sampled " + std::to_string(sample.size()) + " points";
  return o;
}

CheckOutcome run_orbit(const Ctx& c) {
  if (!c.params.contains("start")) bad("orbit-closure needs \"start\"");
  Point start = parse_point(c.params["start"]);
  auto moves = parse_moves(c.params, c.gens().size());
  ClosureResult r =
      orbit_closure(start, moves, c.gens(), c.space(), c.budget(1000));
  CheckOutcome o;
  const auto& pts = closure_points(r);
  if (closure_is_finite(r)) {
    o.value = "finite:" + std::to_string(pts.size());
  } else {
    o.value = "budget-exceeded";
  }
  o.detail = join_points(pts);
  return o;
}

CheckOutcome run_localfinite(const Ctx& c) {
  auto starts = sample_points(c, "starts");
  std::uint64_t budget = c.budget(1000);
  CheckOutcome o;
  std::size_t total = 0;
  for (const Point& x : starts) {
    auto moves = parse_moves(c.params, c.gens().size());
    ClosureResult r = orbit_closure(x, moves, c.gens(), c.space(), budget);
    if (!closure_is_finite(r)) {
      o.value = "budget-exceeded";
      o.detail = "closure of " + x.str() + " passed " +
                 std::to_string(budget) + " points";
      return o;
    }
    total += closure_points(r).size();
  }
  o.value = "all-finite";
  o.detail = std::to_string(starts.size()) + " starts, " +
             std::to_string(total) + " closure points in total";
  return o;
}

CheckOutcome run_interval_ray(const Ctx& c) {
  std::size_t n = c.params.value("n", 1000);
  auto pts = unit_interval_ray(n);
  std::set<Point> distinct(pts.begin(), pts.end());
  CheckOutcome o;
  o.verdict = distinct.size() == pts.size();
  o.value = *o.verdict ? "distinct:" + std::to_string(pts.size())
                       : "repetition-found";
  o.detail = "first points " + join_points(pts, 5);
  return o;
}

CheckOutcome run_ray_decomposition(const Ctx& c) {
  if (!c.params.contains("ray")) bad("ray-decomposition needs \"ray\"");
  const Json& spec = c.params["ray"];
  auto moves = parse_moves(c.params, c.gens().size());
  std::vector<Point> ray;
  if (spec.is_string()) {
    std::string s = spec.get<std::string>();
    if (s.rfind("interval:", 0) != 0)
      bad("ray string must be \"interval:<n>\" or a point array");
    ray = unit_interval_ray(std::stoull(s.substr(9)));
  } else if (spec.is_object() && spec.contains("closure")) {
    const Json& cl = spec["closure"];
    Point start = parse_point(cl.at("start"));
    std::uint64_t budget = cl.value("budget", 50);
    if (c.budget_override) budget = *c.budget_override;
    ClosureResult r = orbit_closure(start, moves, c.gens(), c.space(), budget);
    ray = closure_points(r);
  } else {
    ray = parse_points(spec, "ray");
  }
  RayPieces pieces = ray_decomposition(ray, moves, c.gens());
  CheckOutcome o;
  o.verdict = true;
  o.value = "pass";
  std::string sizes;
  for (std::size_t i = 0; i < pieces.pieces.size(); ++i) {
    if (i) sizes += ",";
    sizes += std::to_string(pieces.pieces[i].size());
  }
  o.detail = std::to_string(ray.size()) + " ray points; piece sizes " + sizes +
             " (final point exempt)";
  return o;
}

CheckOutcome run_components(const Ctx& c) {
  auto omega = sample_points(c, "omega");
  auto comps = move_components(omega, c.gens());
  CheckOutcome o;
  o.value = "components:" + std::to_string(comps.size());
  std::string sizes;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) sizes += ",";
    sizes += std::to_string(comps[i].size());
  }
  o.detail = "sizes " + sizes;
  return o;
}

CheckOutcome run_equidecomp(const Ctx& c) {
  auto a = parse_points(c.params.at("a"), "a");
  auto b = parse_points(c.params.at("b"), "b");
  auto moves = parse_moves(c.params, c.gens().size());
  auto w = equidecomposable(a, b, moves, c.gens(), c.space());
  CheckOutcome o;
  if (!w) {
    o.value = "none";
    o.detail = "no piecewise matching by the listed moves";
    return o;
  }
  WitnessCheck chk = verify_witness(a, b, *w, c.gens(), c.space());
  o.verdict = chk.ok;
  o.value = chk.ok ? "witness:" + std::to_string(w->pieces.size())
                   : "invalid-witness";
  std::string words;
  for (std::size_t i = 0; i < w->pieces.size(); ++i) {
    if (i) words += "; ";
    words += word_str(w->pieces[i].word) + " on " +
             std::to_string(w->pieces[i].piece.size()) + " points";
  }
  o.detail = chk.ok ? words : chk.detail;
  return o;
}

CheckOutcome run_paradox(const Ctx& c) {
  std::string preset = c.params.value("preset", "coin-shift");
  if (preset != "coin-shift") bad("unknown paradox preset \"" + preset + "\"");
  long long depth = c.params.value("depth", 8);
  bool corrupt = c.params.value("corrupt", false);
  CoinShiftParadox cs = coin_shift_paradox(depth, corrupt);
  ParadoxCheck r = paradox_witness_check(cs.witness, cs.gens);
  CheckOutcome o;
  o.value = r.ok ? "true" : "false";
  o.detail = (r.detail.empty() ? std::string("verified") : r.detail) + "; " +
             std::to_string(r.window_points) + " window points at depth " +
             std::to_string(depth);
  return o;
}

FinAlgebra scenario_algebra(const Ctx& c, const std::vector<Point>& omega) {
  if (c.params.contains("partition")) {
    std::vector<std::vector<Point>> blocks;
    for (const Json& e : c.params["partition"])
      blocks.push_back(parse_points(e, "partition block"));
    return FinAlgebra::from_partition(omega, blocks);
  }
  if (omega.size() > 16)
    fail(Errc::invalid_argument,
         "powerset algebra capped at 16 points; supply a partition");
  return FinAlgebra::powerset(omega);
}

CheckOutcome run_level_stack(const Ctx& c) {
  auto omega = explicit_points(c.space());
  FinAlgebra f = scenario_algebra(c, omega);
  LevelStack stack = build_level_stack(omega, c.gens(), f);
  CheckOutcome o;
  o.value = "levels:" + std::to_string(stack.depth());
  std::string w;
  for (std::size_t n = 0; n < stack.depth(); ++n) {
    if (n) w += " | ";
    w += "level " + std::to_string(n + 1) + ":";
    for (std::size_t i = 0; i < omega.size(); ++i)
      w += " " + stack.levels[n].weight(i).str();
  }
  o.detail = w;
  return o;
}

CheckOutcome run_popper_build(const Ctx& c) {
  auto omega = explicit_points(c.space());
  FinAlgebra f = scenario_algebra(c, omega);
  LevelStack stack = build_level_stack(omega, c.gens(), f);
  PopperTable p = popper_from_levels(stack);
  CheckOutcome o;
  o.value = "members:" + std::to_string(f.member_count()) +
            " levels:" + std::to_string(stack.depth());
  std::string d = "conditional on the whole space:";
  std::uint32_t full = f.full_mask();
  for (std::size_t i = 0; i < f.atom_count(); ++i) {
    d += " P(" + join_points(f.atoms()[i], 3) + ")=" +
         rat_str(p.at(std::uint32_t(1) << i, full));
  }
  o.detail = d;
  return o;
}

CheckOutcome run_popper_verify(const Ctx& c) {
  auto omega = explicit_points(c.space());
  FinAlgebra f = scenario_algebra(c, omega);
  LevelStack stack = build_level_stack(omega, c.gens(), f);
  PopperTable p = popper_from_levels(stack);

  LawReport law = verify_popper_axioms(p, c.seed);
  InvarianceReport strong = verify_strong_invariance_popper(p, c.gens());
  InvarianceReport weak = verify_weak_invariance_popper(p, c.gens());

  ExchangeRate cr = exchange_from_popper(p);
  LawReport exlaw = verify_exchange_axioms(cr, c.seed);
  PopperTable back = popper_from_exchange(cr);
  bool roundtrip = true;
  for (std::uint32_t b = 1; b < f.member_count() && roundtrip; ++b)
    for (std::uint32_t a = 0; a < f.member_count(); ++a)
      if (p.at(a, b) != back.at(a, b)) {
        roundtrip = false;
        break;
      }
  bool transfer =
      verify_strong_invariance_exchange(cr, c.gens()).pass() == strong.pass();

  bool all = law.pass() && strong.pass() && weak.pass() && exlaw.pass() &&
             roundtrip && transfer;
  CheckOutcome o;
  o.verdict = all;
  o.value = all ? "pass" : "fail";
  std::ostringstream d;
  d << "levels " << stack.depth() << "; C1/C2 checked " << law.checked
    << (law.pass() ? " ok" : " VIOLATED") << "; strong-invariance "
    << strong.checked << (strong.pass() ? " ok" : " VIOLATED")
    << "; weak-invariance " << weak.checked
    << (weak.pass() ? " ok" : " VIOLATED") << "; exchange laws "
    << (exlaw.pass() ? "ok" : "VIOLATED") << "; round trip "
    << (roundtrip ? "exact" : "BROKEN") << "; invariance transfer "
    << (transfer ? "agrees" : "DISAGREES");
  if (!law.pass()) d << "; first: " << law.violations.front().detail;
  if (!strong.pass()) d << "; first: " << strong.violations.front().detail;
  o.detail = d.str();
  return o;
}

NetIndex parse_net_index(const Ctx& c, const Json& j) {
  NetIndex idx;
  if (j.contains("moves"))
    for (const Json& e : j["moves"]) idx.moves.push_back(parse_word(e, c.gens().size()));
  else
    for (std::size_t i = 0; i < c.gens().size(); ++i)
      idx.moves.push_back(GroupWord::single(int(i)));
  idx.seeds = parse_points(j.at("seeds"), "seeds");
  return idx;
}

CheckOutcome run_net_stage(const Ctx& c) {
  NetIndex idx = parse_net_index(c, c.params);
  auto u = parse_points(c.params.at("u"), "u");
  Rat v = net_stage_measure(idx, u, c.gens(), c.space(), c.budget(10000));
  CheckOutcome o;
  o.value = rat_str(v);
  auto support = net_stage_support(idx, c.gens(), c.space(), c.budget(10000));
  o.detail = "stage support " + std::to_string(support.size()) + " points";
  return o;
}

CheckOutcome run_net_invariance(const Ctx& c) {
  NetIndex idx = parse_net_index(c, c.params);
  std::uint64_t budget = c.budget(10000);
  auto support = net_stage_support(idx, c.gens(), c.space(), budget);
  std::vector<std::string> problems;
  std::size_t comparisons = 0;

  auto stage = [&](const std::vector<Point>& u) {
    return net_stage_measure(idx, u, c.gens(), c.space(), budget);
  };

  if (stage(support) != 1) problems.push_back("mass on the stage support is not 1");
  Rat singletons(0);
  for (const Point& x : support) {
    Rat px = stage({x});
    if (px < 0 || px > 1) problems.push_back("value outside [0,1] at " + x.str());
    singletons += px;
  }
  if (singletons != 1) problems.push_back("singleton masses do not sum to 1");
  std::vector<Point> half(support.begin(),
                          support.begin() + support.size() / 2);
  std::vector<Point> rest(support.begin() + support.size() / 2, support.end());
  if (stage(half) + stage(rest) != 1)
    problems.push_back("additivity fails on a two-part split");

  // invariance at this stage: singletons and the full support, moved by each
  // listed word or its inverse, whenever the image stays admissible
  std::vector<GroupWord> dirs;
  for (const GroupWord& w : idx.moves) {
    dirs.push_back(w);
    dirs.push_back(w.inverse());
  }
  std::vector<std::vector<Point>> probes;
  for (const Point& x : support) probes.push_back({x});
  probes.push_back(support);
  for (const GroupWord& w : dirs) {
    for (const auto& u : probes) {
      std::vector<Point> img;
      bool ok = true;
      for (const Point& x : u) {
        try {
          Point y = apply_word(w, x, c.gens());
          if (!c.space().contains(y)) {
            ok = false;
            break;
          }
          img.push_back(y);
        } catch (const Error&) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      ++comparisons;
      if (stage(u) != stage(img))
        problems.push_back("moved value differs for word " + word_str(w));
    }
  }

  CheckOutcome o;
  o.verdict = problems.empty();
  o.value = problems.empty() ? "pass" : "fail";
  o.detail = problems.empty()
                 ? "support " + std::to_string(support.size()) + " points, " +
                       std::to_string(comparisons) + " moved comparisons"
                 : problems.front();
  return o;
}

CheckOutcome run_net_compare(const Ctx& c) {
  auto u = parse_points(c.params.at("u"), "u");
  auto v = parse_points(c.params.at("v"), "v");
  std::vector<NetIndex> schedule;
  for (const Json& e : c.params.at("schedule"))
    schedule.push_back(parse_net_index(c, e));
  NetComparison r =
      net_compare(u, v, schedule, c.gens(), c.space(), c.budget(10000));
  CheckOutcome o;
  if (r.verdict == NetComparison::Verdict::Stabilized)
    o.value = std::string("stabilized:") +
              (r.sign < 0 ? "less" : r.sign > 0 ? "greater" : "equal");
  else
    o.value = "unstable";
  std::string signs;
  for (int s : r.signs) signs += (s < 0 ? "<" : s > 0 ? ">" : "=");
  o.detail = "stage signs " + signs;
  return o;
}

// Oracle selection: "cone" (default), "lexmax", or "popper" (induced by the
// level-stack table over the scenario's explicit space).
struct OracleBundle {
  QualOracle oracle;
  std::vector<QSet> family;
  std::vector<QMove> moves;
  std::string desc;
};

QualOracle lexmax_oracle() {
  QualOracle o;
  o.claims_total = true;
  o.claims_regular = true;
  o.compare = [](const QSet& a, const QSet& b) {
    if (!std::holds_alternative<ZSet>(a) || !std::holds_alternative<ZSet>(b))
      fail(Errc::variant_mismatch, "largest-point order needs integer sets");
    return lexmax_compare(std::get<ZSet>(a), std::get<ZSet>(b));
  };
  return o;
}

OracleBundle make_oracle(const Ctx& c) {
  OracleBundle b;
  std::string kind = c.params.value("oracle", "cone");
  b.desc = kind;
  if (kind == "cone" || kind == "lexmax") {
    b.oracle = kind == "cone" ? cone_oracle() : lexmax_oracle();
    if (c.params.contains("family"))
      for (const Json& e : c.params["family"])
        b.family.emplace_back(parse_zset_json(e, "family entry"));
    std::vector<long long> shifts = {1, -1};
    if (c.params.contains("translations")) {
      shifts.clear();
      for (const Json& e : c.params["translations"])
        shifts.push_back(parse_ll(e, "translation"));
    }
    b.moves = translation_moves(shifts);
    return b;
  }
  if (kind == "popper") {
    auto omega = explicit_points(c.space());
    FinAlgebra f = scenario_algebra(c, omega);
    LevelStack stack = build_level_stack(omega, c.gens(), f);
    PopperTable p = popper_from_levels(stack);
    b.oracle = qual_from_popper(p);
    if (c.params.contains("family-masks"))
      for (const Json& e : c.params["family-masks"])
        b.family.emplace_back(
            std::uint32_t(parse_ll(e, "family mask")));
    else
      for (std::uint32_t m = 0; m < f.member_count(); ++m)
        b.family.emplace_back(m);
    b.moves = algebra_moves(f, c.gens());
    return b;
  }
  bad("unknown oracle \"" + kind + "\"");
}

std::string qual_report_detail(const QualReport& rep) {
  std::ostringstream d;
  d << rep.checked << " comparisons";
  if (rep.undetermined_count)
    d << ", " << rep.undetermined_count << " undetermined";
  if (rep.violation_count) {
    d << "; " << rep.violation_count
      << " violations, first: " << rep.violations.front().law << " "
      << rep.violations.front().detail;
  }
  return d.str();
}

CheckOutcome run_qual_axioms(const Ctx& c) {
  OracleBundle b = make_oracle(c);
  QualReport rep = verify_qual_axioms(b.oracle, b.family);
  CheckOutcome o;
  o.verdict = rep.pass();
  o.value = rep.pass() ? "pass" : "fail";
  o.detail = b.desc + " oracle: " + qual_report_detail(rep);
  return o;
}

CheckOutcome run_qual_compare(const Ctx& c) {
  OracleBundle b = make_oracle(c);
  QSet a, bb;
  if (c.params.at("a").is_number_integer()) {
    a = std::uint32_t(parse_ll(c.params["a"], "a"));
    bb = std::uint32_t(parse_ll(c.params.at("b"), "b"));
  } else {
    a = parse_zset_json(c.params.at("a"), "a");
    bb = parse_zset_json(c.params.at("b"), "b");
  }
  CheckOutcome o;
  CompareVerdict v = b.oracle.compare(a, bb);
  o.value = verdict_str(v);
  o.undetermined = v == CompareVerdict::Undetermined;
  o.detail = b.desc + " oracle on " + qset_str(a) + " vs " + qset_str(bb);
  return o;
}

CheckOutcome run_invariance_qual(const Ctx& c, bool strong) {
  OracleBundle b = make_oracle(c);
  QualReport rep = strong
                       ? verify_strong_invariance_qual(b.oracle, b.moves, b.family)
                       : verify_weak_invariance_qual(b.oracle, b.moves, b.family);
  CheckOutcome o;
  o.verdict = rep.pass();
  o.value = rep.pass() ? "pass" : "fail";
  o.detail = b.desc + " oracle: " + qual_report_detail(rep);
  return o;
}

CheckOutcome run_finite_order(const Ctx& c) {
  FiniteOrderReport rep =
      finite_order_certificate(c.gens(), c.budget(64));
  CheckOutcome o;
  o.value = rep.certificate ? "certificate" : "no-certificate";
  std::string orders;
  for (std::size_t i = 0; i < rep.orders.size(); ++i) {
    if (i) orders += "; ";
    orders += rep.orders[i].generator + ": " +
              (rep.orders[i].order ? std::to_string(*rep.orders[i].order)
                                   : "not found");
  }
  o.detail = orders.empty() ? rep.detail : orders + ". " + rep.detail;
  return o;
}

CheckOutcome run_halfline_dichotomy(const Ctx& c) {
  OracleBundle b = make_oracle(c);
  long long m_lo = c.params.value("m-lo", -5), m_hi = c.params.value("m-hi", 5);
  long long n_lo = c.params.value("n-lo", -5), n_hi = c.params.value("n-hi", 5);
  SkewCheckReport rep = halfline_dichotomy_check(b.oracle, m_lo, m_hi, n_lo, n_hi);
  CheckOutcome o;
  o.verdict = rep.dichotomy_ok();
  o.value = "branch:" + rep.branch;
  std::ostringstream d;
  d << rep.total << " pairs: " << rep.less << " Less, " << rep.greater
    << " Greater, " << rep.equiv << " Equiv, " << rep.undetermined
    << " undetermined";
  o.detail = d.str();
  return o;
}

CheckOutcome run_c0_compare(const Ctx& c) {
  ZSet a = parse_zset_json(c.params.at("a"), "a");
  ZSet b = parse_zset_json(c.params.at("b"), "b");
  CheckOutcome o;
  CompareVerdict v = c0_compare(a, b);
  o.value = verdict_str(v);
  o.undetermined = v == CompareVerdict::Undetermined;
  o.detail = a.str() + " vs " + b.str();
  return o;
}

CheckOutcome run_gamma(const Ctx& c) {
  ZSet a = parse_zset_json(c.params.at("a"), "a");
  ZSet b = parse_zset_json(c.params.at("b"), "b");
  CheckOutcome o;
  GammaResult g = gamma_indicator(a, b);
  o.value = g.str();
  o.undetermined = g.kind == GammaResult::Kind::Undetermined;
  o.detail = "scaling threshold of " + a.str() + " against " + b.str();
  return o;
}

CheckOutcome run_skew(const Ctx& c) {
  ZSet a = parse_zset_json(c.params.at("a"), "a");
  ZSet b = parse_zset_json(c.params.at("b"), "b");
  CheckOutcome o;
  SkewResult sk = skew_popper(a, b);
  o.value = sk.str();
  o.undetermined = !sk.determined;
  o.detail = "conditional value of " + a.str() + " given " + b.str();
  return o;
}

CheckOutcome run_gamma_laws(const Ctx& c) {
  ZSet a = parse_zset_json(c.params.at("a"), "a");
  ZSet b = parse_zset_json(c.params.at("b"), "b");
  ZSet cc = parse_zset_json(c.params.at("c"), "c");
  GammaLawReport rep = gamma_law_check(a, b, cc);
  CheckOutcome o;
  bool any = rep.additivity_checked || rep.cocycle_checked;
  if (!any) {
    o.value = "skipped";
  } else {
    o.verdict = rep.pass();
    o.value = rep.pass() ? "pass" : "fail";
  }
  o.detail = "additivity: " + rep.additivity_detail +
             "; cocycle: " + rep.cocycle_detail;
  return o;
}

CheckOutcome run_convolve(const Ctx& c) {
  FinFn f = parse_finfn(c.params.at("f"), "f");
  FinFn g = parse_finfn(c.params.at("g"), "g");
  CheckOutcome o;
  o.value = convolve(f, g).str();
  o.detail = f.str() + " * " + g.str();
  return o;
}

using Handler = CheckOutcome (*)(const Ctx&);

const std::map<std::string, Handler>& registry() {
  static const std::map<std::string, Handler> reg = {
      {"partial-action-axioms", run_axioms},
      {"orbit-closure", run_orbit},
      {"localfinite", run_localfinite},
      {"interval-ray", run_interval_ray},
      {"ray-decomposition", run_ray_decomposition},
      {"move-components", run_components},
      {"equidecomp", run_equidecomp},
      {"paradox", run_paradox},
      {"level-stack", run_level_stack},
      {"popper-build", run_popper_build},
      {"popper-verify", run_popper_verify},
      {"net-stage", run_net_stage},
      {"net-invariance", run_net_invariance},
      {"net-compare", run_net_compare},
      {"qual-axioms", run_qual_axioms},
      {"qual-compare", run_qual_compare},
      {"weak-invariance",
       [](const Ctx& c) { return run_invariance_qual(c, false); }},
      {"strong-invariance",
       [](const Ctx& c) { return run_invariance_qual(c, true); }},
      {"finite-order", run_finite_order},
      {"halfline-dichotomy", run_halfline_dichotomy},
      {"c0-compare", run_c0_compare},
      {"gamma", run_gamma},
      {"skew", run_skew},
      {"gamma-laws", run_gamma_laws},
      {"convolve", run_convolve},
  };
  return reg;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  Json j = parse_json_text(json_text, "scenario");
  if (!j.is_object()) bad("scenario must be a JSON object");
  Scenario sc;
  sc.name = j.value("name", "scenario");
  sc.space = j.contains("space") ? parse_space(j["space"])
                                 : SpaceSpec::integers();
  if (j.contains("generators"))
    for (const Json& e : j["generators"])
      sc.generators.push_back(parse_generator(e));
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) bad("\"checks\" must be an array");
    for (const Json& e : j["checks"]) {
      if (!e.is_object() || !e.contains("check"))
        bad("each check needs a \"check\" name");
      CheckSpec cs;
      cs.check = e["check"].get<std::string>();
      cs.label = e.value("label", "");
      cs.cite = e.value("cite", "");
      if (e.contains("expect")) {
        const Json& x = e["expect"];
        cs.expect = x.is_string() ? x.get<std::string>() : x.dump();
      }
      Json params = e;
      params.erase("check");
      params.erase("label");
      params.erase("expect");
      params.erase("cite");
      cs.params_json = params.dump();
      if (cs.check != "cited" && !registry().count(cs.check))
        fail(Errc::unknown_check, "unknown check \"" + cs.check + "\"");
      sc.checks.push_back(std::move(cs));
    }
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open scenario file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

Report run_scenario(const Scenario& sc, std::uint64_t seed,
                    std::optional<std::uint64_t> budget_override) {
  Report rep;
  rep.title = sc.name;
  rep.has_seed = true;
  rep.seed = seed;
  for (const CheckSpec& cs : sc.checks) {
    CheckResult r;
    r.name = cs.label.empty() ? cs.check : cs.label;
    r.citation = cs.cite;
    if (cs.check == "cited") {
      Json params = parse_json_text(cs.params_json, "cited params");
      r.outcome = Outcome::Cited;
      r.value = params.contains("value")
                    ? (params["value"].is_string()
                           ? params["value"].get<std::string>()
                           : params["value"].dump())
                    : "";
      r.detail = params.value("detail", "");
      rep.add(std::move(r));
      continue;
    }
    Ctx ctx;
    ctx.sc = &sc;
    ctx.params = parse_json_text(cs.params_json, "check params");
    ctx.seed = seed;
    ctx.budget_override = budget_override;
    try {
      CheckOutcome o = registry().at(cs.check)(ctx);
      r.value = o.value;
      r.detail = o.detail;
      if (!cs.expect.empty()) {
        r.expected = cs.expect;
        r.expected_match = (o.value == cs.expect);
        r.outcome = r.expected_match ? Outcome::Pass : Outcome::Fail;
      } else if (o.verdict) {
        r.outcome = *o.verdict ? Outcome::Pass : Outcome::Fail;
      } else {
        r.outcome = o.undetermined ? Outcome::Undetermined : Outcome::Info;
      }
    } catch (const Error& e) {
      r.value = errc_name(e.code());
      r.detail = e.what();
      if (!cs.expect.empty()) {
        r.expected = cs.expect;
        r.expected_match = (r.value == cs.expect);
        r.outcome = r.expected_match ? Outcome::Pass : Outcome::Error;
      } else {
        r.outcome = Outcome::Error;
      }
    }
    rep.add(std::move(r));
  }
  return rep;
}

namespace {

// The bundled gallery. The files under scenarios/ carry the same text; the
// embedded copies keep `scenario run` usable from any directory.
const std::pair<const char*, const char*> kBundled[] = {
    {"finite-space", R"json({
  "name": "finite-space",
  "space": {"explicit": [0, 1, 2, 3]},
  "generators": [{"permutation": [[0, 1], [1, 2], [2, 3], [3, 0]]}],
  "checks": [
    {"check": "partial-action-axioms", "expect": "pass"},
    {"check": "orbit-closure", "start": 0, "expect": "finite:4"},
    {"check": "move-components", "expect": "components:1"},
    {"check": "equidecomp", "a": [0, 1], "b": [1, 2], "expect": "witness:1"},
    {"check": "level-stack", "expect": "levels:1"},
    {"check": "popper-verify", "expect": "pass"},
    {"check": "qual-axioms", "oracle": "popper", "expect": "pass"},
    {"check": "strong-invariance", "oracle": "popper", "expect": "pass"},
    {"check": "net-invariance", "seeds": [0], "expect": "pass"}
  ]
})json"},
    {"coin-reversals", R"json({
  "name": "coin-reversals",
  "space": {"explicit": [{"bits": []}, {"bits": [0]}, {"bits": [1]}, {"bits": [0, 1]}]},
  "generators": [{"reverse": [0]}, {"reverse": [1]}],
  "checks": [
    {"check": "partial-action-axioms", "expect": "pass"},
    {"check": "orbit-closure", "start": {"bits": []}, "expect": "finite:4"},
    {"check": "localfinite", "expect": "all-finite"},
    {"check": "finite-order", "expect": "certificate"},
    {"check": "move-components", "expect": "components:1"},
    {"check": "level-stack", "expect": "levels:1"},
    {"check": "popper-verify", "expect": "pass"},
    {"check": "qual-axioms", "oracle": "popper", "expect": "pass"},
    {"check": "net-stage", "seeds": [{"bits": []}], "u": [{"bits": []}, {"bits": [0]}], "expect": "1/2"},
    {"check": "net-invariance", "seeds": [{"bits": []}], "expect": "pass"}
  ]
})json"},
    {"integer-lottery", R"json({
  "name": "integer-lottery",
  "space": "integers",
  "generators": [{"translate": 1}],
  "checks": [
    {"check": "partial-action-axioms", "sample": [-3, -2, -1, 0, 1, 2, 3], "expect": "pass"},
    {"check": "orbit-closure", "start": 0, "expect": "budget-exceeded"},
    {"check": "ray-decomposition", "ray": {"closure": {"start": 0, "budget": 30}}, "expect": "pass"},
    {"check": "qual-compare", "oracle": "lexmax", "a": "finite:[1,2]", "b": "finite:[3]", "expect": "Less"},
    {"check": "qual-axioms", "oracle": "lexmax", "family": ["finite:[1]", "finite:[2]", "finite:[1,2]", "finite:[1,3]", "cofinite-ex:[1]", "cofinite-ex:[2,4]"], "expect": "pass"},
    {"check": "weak-invariance", "oracle": "lexmax", "family": ["finite:[1]", "finite:[2]", "finite:[1,2]", "cofinite-ex:[1]"], "expect": "pass"},
    {"check": "strong-invariance", "label": "strong-invariance (expected failure)", "oracle": "lexmax", "family": ["finite:[1]", "finite:[2]"], "expect": "fail"},
    {"check": "strong-invariance", "oracle": "cone", "family": ["finite:[1]", "finite:[2]", "finite:[1,2]", "cofinite-ex:[1]"], "expect": "pass"},
    {"check": "halfline-dichotomy", "m-lo": -5, "m-hi": 5, "n-lo": -5, "n-hi": 5, "expect": "branch:i"},
    {"check": "c0-compare", "label": "c0-compare singletons", "a": "finite:[5]", "b": "finite:[9]", "expect": "Equiv"},
    {"check": "c0-compare", "label": "c0-compare negatives vs sparse", "a": "Lm:-1", "b": "sparse:double-exp", "expect": "Less"},
    {"check": "gamma", "a": "finite:[5]", "b": "finite:[5,9]", "expect": "1/2"},
    {"check": "skew", "a": "Lm:-1", "b": "Lm:-1|sparse:double-exp", "expect": "0"},
    {"check": "gamma-laws", "a": "finite:[1]", "b": "finite:[2]", "c": "finite:[1,2,3]", "expect": "pass"}
  ]
})json"},
    {"interval-translations", R"json({
  "name": "interval-translations",
  "space": {"interval": [0, 1]},
  "generators": [{"translate-quad": [0, 1]}, {"translate": "-1/2"}],
  "checks": [
    {"check": "partial-action-axioms", "sample": [0, "1/4", "1/2", "3/4", 1, {"quad": [0, 1]}, {"quad": ["1/2", 1]}], "expect": "pass"},
    {"check": "interval-ray", "n": 50, "expect": "distinct:51"},
    {"check": "orbit-closure", "start": 0, "budget": 100, "expect": "budget-exceeded"},
    {"check": "ray-decomposition", "ray": "interval:50", "expect": "pass"},
    {"check": "equidecomp", "a": ["1/2"], "b": [0], "expect": "witness:1"},
    {"check": "cited", "label": "invariant full conditional probability", "value": "yes", "cite": "Tomkowicz and Wagon, The Banach-Tarski Paradox, 2nd ed. (2016), Theorem 14.4", "detail": "interval translations generate an abelian, hence supramenable, group"}
  ]
})json"},
    {"coin-shift-paradox", R"json({
  "name": "coin-shift-paradox",
  "space": "all",
  "generators": [{"shift": 1}, {"reverse": [1]}],
  "checks": [
    {"check": "partial-action-axioms", "sample": [{"bits": []}, {"bits": [0]}, {"bits": [1]}, {"bits": [2]}, {"bits": [0, 1]}, {"bits": [1, 2]}], "expect": "pass"},
    {"check": "orbit-closure", "start": {"bits": [0]}, "budget": 64, "expect": "budget-exceeded"},
    {"check": "paradox", "preset": "coin-shift", "depth": 8, "expect": "true"},
    {"check": "paradox", "label": "paradox (corrupted witness)", "preset": "coin-shift", "depth": 8, "corrupt": true, "expect": "false"}
  ]
})json"},
};

}  // namespace

std::vector<std::string> bundled_scenario_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : kBundled) names.emplace_back(name);
  return names;
}

const std::string& bundled_scenario_text(const std::string& name) {
  static const std::map<std::string, std::string> texts = [] {
    std::map<std::string, std::string> m;
    for (const auto& [n, t] : kBundled) m.emplace(n, std::string(t) + "\n");
    return m;
  }();
  auto it = texts.find(name);
  if (it == texts.end())
    fail(Errc::invalid_argument, "no bundled scenario named \"" + name + "\"");
  return it->second;
}

Scenario bundled_scenario(const std::string& name) {
  return parse_scenario(bundled_scenario_text(name));
}

CoinShiftParadox coin_shift_paradox(long long depth, bool corrupt) {
  // Convention: a coordinate is in a point's support when that toss is
  // tails. E = heads everywhere from coordinate 2 on is then "no support at
  // >= 2", a decidable tail constraint, and its finite-support members are
  // exactly the window points the checker enumerates.
  CoinShiftParadox cs;
  cs.gens = {Shift{1}, ReverseMask{{1}}};

  BitCylinder e;
  e.zeros_from = 2;
  BitCylinder a;
  a.zeros_from = 1;
  BitCylinder b;
  b.fixed[1] = 1;
  b.zeros_from = 2;

  auto desc = [](BitCylinder cyl) {
    SetDesc d;
    d.cylinder = std::move(cyl);
    return d;
  };

  GroupWord shift_right = GroupWord::single(0);
  GroupWord flip_then_shift{{{1, 1}, {0, 1}}};
  if (corrupt) std::swap(shift_right, flip_then_shift);

  cs.witness.whole = desc(e);
  cs.witness.part_a = desc(a);
  cs.witness.part_b = desc(b);
  cs.witness.to_e_from_a.pieces = {{desc(a), shift_right}};
  cs.witness.to_e_from_b.pieces = {{desc(b), flip_then_shift}};
  cs.witness.depth = depth;
  return cs;
}

}  // namespace invprob
