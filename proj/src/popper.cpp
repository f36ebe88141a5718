#include "invprob/popper.hpp"

#include <random>

#include "invprob/error.hpp"

namespace invprob {

namespace {

std::string member_str(const FinAlgebra& f, std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (const Point& p : f.member_points(mask)) {
    if (!first) s += ",";
    s += p.str();
    first = false;
  }
  return s + "}";
}

}  // namespace

PopperTable::PopperTable(FinAlgebra f, std::vector<std::vector<Rat>> entries)
    : f_(std::move(f)), entries_(std::move(entries)) {
  if (entries_.size() != f_.member_count())
    fail(Errc::invalid_argument, "conditional table row count mismatch");
}

const Rat& PopperTable::at(std::uint32_t a_mask, std::uint32_t b_mask) const {
  if (b_mask == 0)
    fail(Errc::invalid_argument, "conditioning on the empty member");
  return entries_[b_mask][a_mask];
}

void PopperTable::set(std::uint32_t a_mask, std::uint32_t b_mask, Rat v) {
  if (b_mask == 0)
    fail(Errc::invalid_argument, "conditioning on the empty member");
  entries_[b_mask][a_mask] = std::move(v);
}

PopperTable popper_from_levels(const LevelStack& stack) {
  const FinAlgebra& f = stack.algebra;
  std::vector<std::vector<Rat>> entries(f.member_count());
  entries[0].assign(f.member_count(), Rat(0));  // row unused
  for (std::uint32_t b = 1; b < f.member_count(); ++b) {
    const Measure& mu = stack.levels[stack.level_of_member[b] - 1];
    ExtRat denom = mu.eval_mask(f, b);
    entries[b].reserve(f.member_count());
    for (std::uint32_t a = 0; a < f.member_count(); ++a) {
      ExtRat num = mu.eval_mask(f, a & b);
      auto q = div(num, denom);
      if (!q || q->is_inf())
        fail(Errc::internal, "level measure not finite-positive on member");
      entries[b].push_back(q->finite_value());
    }
  }
  return PopperTable(f, std::move(entries));
}

ExchangeRate::ExchangeRate(
    FinAlgebra f, std::vector<std::vector<std::optional<ExtRat>>> entries)
    : f_(std::move(f)), entries_(std::move(entries)) {
  if (entries_.size() != f_.member_count())
    fail(Errc::invalid_argument, "exchange table row count mismatch");
}

const std::optional<ExtRat>& ExchangeRate::at(std::uint32_t a_mask,
                                              std::uint32_t b_mask) const {
  if (b_mask == 0)
    fail(Errc::invalid_argument, "exchange rate against the empty member");
  return entries_[b_mask][a_mask];
}

ExchangeRate exchange_from_popper(const PopperTable& p) {
  const FinAlgebra& f = p.algebra();
  std::vector<std::vector<std::optional<ExtRat>>> entries(f.member_count());
  entries[0].assign(f.member_count(), std::nullopt);
  for (std::uint32_t b = 1; b < f.member_count(); ++b) {
    entries[b].reserve(f.member_count());
    for (std::uint32_t a = 0; a < f.member_count(); ++a) {
      std::uint32_t un = a | b;
      entries[b].push_back(
          div(ExtRat(p.at(a, un)), ExtRat(p.at(b, un))));
    }
  }
  return ExchangeRate(f, std::move(entries));
}

PopperTable popper_from_exchange(const ExchangeRate& c) {
  LawReport axioms = verify_exchange_axioms(c);
  if (!axioms.pass())
    fail(Errc::invalid_rate,
         "exchange table violates " + axioms.violations.front().law + ": " +
             axioms.violations.front().detail);
  const FinAlgebra& f = c.algebra();
  std::vector<std::vector<Rat>> entries(f.member_count());
  entries[0].assign(f.member_count(), Rat(0));
  for (std::uint32_t b = 1; b < f.member_count(); ++b) {
    entries[b].reserve(f.member_count());
    for (std::uint32_t a = 0; a < f.member_count(); ++a) {
      const auto& v = c.at(a & b, b);
      if (!v)
        fail(Errc::invalid_rate, "undefined rate for a conditional entry");
      if (v->is_inf())
        fail(Errc::invalid_rate, "infinite rate c(A∩B, B) breaks [0,1] range");
      entries[b].push_back(v->finite_value());
    }
  }
  return PopperTable(f, std::move(entries));
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> atom_splits(
    const FinAlgebra& f, std::uint32_t mask) {
  // decompositions "first atom of A" + "rest of A": enough for additivity by
  // induction
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  if (mask == 0) return out;
  std::uint32_t low = mask & (~mask + 1u);
  out.push_back({low, mask & ~low});
  return out;
}

}  // namespace

LawReport verify_popper_axioms(const PopperTable& p, std::uint64_t seed) {
  const FinAlgebra& f = p.algebra();
  const std::uint32_t members = f.member_count();
  LawReport rep;
  auto note = [&](std::string law, std::string detail) {
    if (rep.violations.size() < 32)
      rep.violations.push_back({std::move(law), std::move(detail)});
  };

  if (members > (1u << 10))
    fail(Errc::invalid_argument, "algebra too large to verify");

  for (std::uint32_t b = 1; b < members; ++b) {
    // range and normalization
    if (!(p.at(f.full_mask(), b) == 1))
      note("C1-normalization",
           "P(Omega|" + member_str(f, b) + ") = " +
               p.at(f.full_mask(), b).str());
    for (std::uint32_t a = 0; a < members; ++a) {
      const Rat& v = p.at(a, b);
      if (v < 0 || v > 1)
        note("C1-range", "P(" + member_str(f, a) + "|" + member_str(f, b) +
                             ") = " + v.str());
      for (auto [x, y] : atom_splits(f, a)) {
        ++rep.checked;
        if (p.at(a, b) != p.at(x, b) + p.at(y, b))
          note("C1-additivity",
               "P splits unevenly on " + member_str(f, a) + " given " +
                   member_str(f, b));
      }
    }
  }

  // C2 sweep: exhaustive on small algebras, seeded sampling above
  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    ++rep.checked;
    std::uint32_t ac = a & c;
    if (ac != 0) {
      if (p.at(a & b, c) != p.at(a, c) * p.at(b, ac))
        note("C2", "product law fails at A=" + member_str(f, a) +
                       " B=" + member_str(f, b) + " C=" + member_str(f, c));
    } else {
      // degenerate branch: both sides must vanish
      if (!(p.at(a, c) == 0) || !(p.at(a & b, c) == 0))
        note("C2-degenerate",
             "A∩C empty but P(A|C) or P(A∩B|C) is nonzero at A=" +
                 member_str(f, a) + " C=" + member_str(f, c));
    }
  };
  if (members <= (1u << 6)) {
    for (std::uint32_t c = 1; c < members; ++c)
      for (std::uint32_t a = 0; a < members; ++a)
        for (std::uint32_t b = 0; b < members; ++b) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, members - 1);
    for (int i = 0; i < 200000; ++i) {
      std::uint32_t c = pick(rng);
      if (c == 0) continue;
      check_triple(pick(rng), pick(rng), c);
      ++rep.sampled;
    }
  }

  // informational: classical redundant condition
  for (std::uint32_t a = 1; a < members; ++a)
    for (std::uint32_t b = 1; b < members; ++b) {
      if (!(p.at(a, b) == 1) || !(p.at(b, a) == 1)) continue;
      for (std::uint32_t c = 0; c < members; ++c)
        if (p.at(c, a) != p.at(c, b)) {
          if (rep.derived_notes.size() < 8)
            rep.derived_notes.push_back(
                {"derived-transfer",
                 "P(A|B)=P(B|A)=1 but P(.|A) and P(.|B) differ at C=" +
                     member_str(f, c)});
        }
    }
  return rep;
}

LawReport verify_exchange_axioms(const ExchangeRate& c, std::uint64_t seed) {
  const FinAlgebra& f = c.algebra();
  const std::uint32_t members = f.member_count();
  LawReport rep;
  auto note = [&](std::string law, std::string detail) {
    if (rep.violations.size() < 32)
      rep.violations.push_back({std::move(law), std::move(detail)});
  };
  if (members > (1u << 10))
    fail(Errc::invalid_argument, "algebra too large to verify");

  for (std::uint32_t b = 1; b < members; ++b) {
    const auto& self = c.at(b, b);
    if (!self || !(*self == ExtRat(Rat(1))))
      note("E3", "c(B,B) != 1 at B=" + member_str(f, b));
    for (std::uint32_t a = 0; a < members; ++a) {
      const auto& v = c.at(a, b);
      if (!v) continue;  // undefined entries are recorded, not violations
      for (auto [x, y] : atom_splits(f, a)) {
        ++rep.checked;
        const auto& vx = c.at(x, b);
        const auto& vy = c.at(y, b);
        if (!vx || !vy) {
          note("E1", "defined rate with undefined parts at A=" +
                         member_str(f, a) + " B=" + member_str(f, b));
          continue;
        }
        if (!(*v == *vx + *vy))
          note("E1", "first-slot additivity fails at A=" + member_str(f, a) +
                         " B=" + member_str(f, b));
      }
    }
  }

  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t cc) {
    const auto& ab = c.at(a, b);
    const auto& bc = c.at(b, cc);
    const auto& ac = c.at(a, cc);
    if (!ab || !bc || !ac) return;
    auto prod = mul(*ab, *bc);
    if (!prod) return;  // 0 * inf: law imposes nothing
    ++rep.checked;
    if (!(*prod == *ac))
      note("E2", "cocycle fails at A=" + member_str(f, a) +
                     " B=" + member_str(f, b) + " C=" + member_str(f, cc));
  };
  if (members <= (1u << 6)) {
    for (std::uint32_t cc = 1; cc < members; ++cc)
      for (std::uint32_t b = 1; b < members; ++b)
        for (std::uint32_t a = 0; a < members; ++a) check_triple(a, b, cc);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, members - 1);
    for (int i = 0; i < 200000; ++i) {
      std::uint32_t b = pick(rng), cc = pick(rng);
      if (b == 0 || cc == 0) continue;
      check_triple(pick(rng), b, cc);
      ++rep.sampled;
    }
  }
  return rep;
}

namespace {

// all generator directions (forward and inverted)
std::vector<std::pair<const Generator*, bool>> directions(
    const std::vector<Generator>& gens) {
  std::vector<std::pair<const Generator*, bool>> out;
  for (const Generator& g : gens) {
    out.push_back({&g, false});
    out.push_back({&g, true});
  }
  return out;
}

std::string dir_str(const Generator& g, bool inv) {
  return generator_str(g) + (inv ? " inverted" : "");
}

}  // namespace

InvarianceReport verify_strong_invariance_popper(
    const PopperTable& p, const std::vector<Generator>& gens) {
  const FinAlgebra& f = p.algebra();
  InvarianceReport rep;
  for (auto [g, inv] : directions(gens))
    for (std::uint32_t a = 0; a < f.member_count(); ++a) {
      auto ga = f.image_mask(a, *g, inv);
      if (!ga) continue;
      for (std::uint32_t b = 1; b < f.member_count(); ++b) {
        if ((a & b) != a || (*ga & b) != *ga) continue;  // need A, gA ⊆ B
        ++rep.checked;
        if (p.at(a, b) != p.at(*ga, b) && rep.violations.size() < 16)
          rep.violations.push_back(
              {"P(gA|B) != P(A|B) for g=" + dir_str(*g, inv) +
                   " A=" + member_str(f, a) + " B=" + member_str(f, b),
               a, b});
      }
    }
  return rep;
}

InvarianceReport verify_weak_invariance_popper(
    const PopperTable& p, const std::vector<Generator>& gens) {
  const FinAlgebra& f = p.algebra();
  InvarianceReport rep;
  for (auto [g, inv] : directions(gens))
    for (std::uint32_t b = 1; b < f.member_count(); ++b) {
      auto gb = f.image_mask(b, *g, inv);
      if (!gb || *gb == 0) continue;
      for (std::uint32_t a = 0; a < f.member_count(); ++a) {
        auto ga = f.image_mask(a, *g, inv);
        if (!ga) continue;
        ++rep.checked;
        if (p.at(a, b) != p.at(*ga, *gb) && rep.violations.size() < 16)
          rep.violations.push_back(
              {"P(gA|gB) != P(A|B) for g=" + dir_str(*g, inv) +
                   " A=" + member_str(f, a) + " B=" + member_str(f, b),
               a, b});
      }
    }
  return rep;
}

InvarianceReport verify_strong_invariance_exchange(
    const ExchangeRate& c, const std::vector<Generator>& gens) {
  const FinAlgebra& f = c.algebra();
  InvarianceReport rep;
  for (auto [g, inv] : directions(gens))
    for (std::uint32_t a = 0; a < f.member_count(); ++a) {
      auto ga = f.image_mask(a, *g, inv);
      if (!ga) continue;
      for (std::uint32_t b = 1; b < f.member_count(); ++b) {
        const auto& va = c.at(a, b);
        const auto& vga = c.at(*ga, b);
        if (!va || !vga) continue;
        ++rep.checked;
        if (!(*va == *vga) && rep.violations.size() < 16)
          rep.violations.push_back(
              {"c(gA,B) != c(A,B) for g=" + dir_str(*g, inv) +
                   " A=" + member_str(f, a) + " B=" + member_str(f, b),
               a, b});
      }
    }
  return rep;
}

}  // namespace invprob
