#include "invprob/generator.hpp"

#include <algorithm>
#include <set>

#include "invprob/error.hpp"

namespace invprob {

namespace {

Point translate(const Point& x, const Quad& step, bool inverse) {
  if (!x.is_numeric())
    fail(Errc::variant_mismatch, "translation applied to " + x.str());
  Quad s = inverse ? Quad{-step.p, -step.q} : step;
  return Point::of_quad(quad_add(x.numeric(), s));
}

Point permute(const PermutationTable& t, const Point& x, bool inverse) {
  if (!inverse) {
    for (const auto& [from, to] : t.pairs)
      if (from == x) return to;
    return x;
  }
  for (const auto& [from, to] : t.pairs)
    if (to == x) return from;
  return x;
}

Point shift_bits(const Point& x, long long offset) {
  if (!x.is_bits())
    fail(Errc::variant_mismatch, "shift applied to " + x.str());
  Bits b = x.as_bits();
  for (long long& i : b) i += offset;
  return Point::of_bits(std::move(b));
}

Point reverse_bits(const Point& x, const Bits& mask) {
  if (!x.is_bits())
    fail(Errc::variant_mismatch, "reverse-mask applied to " + x.str());
  const Bits& b = x.as_bits();
  Bits out;
  std::set_symmetric_difference(b.begin(), b.end(), mask.begin(), mask.end(),
                                std::back_inserter(out));
  return Point::of_bits(std::move(out));
}

}  // namespace

bool PermutationTable::is_valid_bijection() const {
  std::set<Point> dom, rng;
  for (const auto& [from, to] : pairs) {
    if (!dom.insert(from).second) return false;
    if (!rng.insert(to).second) return false;
  }
  return dom == rng;
}

Point apply_gen(const Generator& g, const Point& x, bool inverse) {
  return std::visit(
      [&](const auto& k) -> Point {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, TranslateRational>)
          return translate(x, Quad{k.step, 0}, inverse);
        else if constexpr (std::is_same_v<K, TranslateQuad>)
          return translate(x, k.step, inverse);
        else if constexpr (std::is_same_v<K, PermutationTable>)
          return permute(k, x, inverse);
        else if constexpr (std::is_same_v<K, Shift>)
          return shift_bits(x, inverse ? -k.offset : k.offset);
        else
          return reverse_bits(x, k.mask);  // self-inverse
      },
      g);
}

std::string generator_str(const Generator& g) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, TranslateRational>)
          return "translate(" + k.step.str() + ")";
        else if constexpr (std::is_same_v<K, TranslateQuad>)
          return "translate(" + quad_str(k.step) + ")";
        else if constexpr (std::is_same_v<K, PermutationTable>)
          return "permutation[" + std::to_string(k.pairs.size()) + " pairs]";
        else if constexpr (std::is_same_v<K, Shift>)
          return "shift(" + std::to_string(k.offset) + ")";
        else {
          std::string s = "reverse{";
          bool first = true;
          for (long long i : k.mask) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
          }
          return s + "}";
        }
      },
      g);
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back({it->first, -it->second});
  return w;
}

GroupWord GroupWord::then(const GroupWord& next) const {
  GroupWord w = *this;
  w.letters.insert(w.letters.end(), next.letters.begin(), next.letters.end());
  return w;
}

Point apply_word(const GroupWord& w, const Point& x,
                 const std::vector<Generator>& gens) {
  Point cur = x;
  for (const auto& [idx, sign] : w.letters) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= gens.size())
      fail(Errc::invalid_argument,
           "word letter refers to generator " + std::to_string(idx));
    if (sign != 1 && sign != -1)
      fail(Errc::invalid_argument, "word letter sign must be +-1");
    cur = apply_gen(gens[idx], cur, sign < 0);
  }
  return cur;
}

std::string word_str(const GroupWord& w) {
  if (w.letters.empty()) return "e";
  std::string s;
  for (const auto& [idx, sign] : w.letters) {
    if (!s.empty()) s += ".";
    s += "g" + std::to_string(idx);
    if (sign < 0) s += "'";
  }
  return s;
}

}  // namespace invprob
