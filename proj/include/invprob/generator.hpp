#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "invprob/point.hpp"

namespace invprob {

// Each generator kind denotes a total bijection of the ambient space.
// Application never consults the admissible-region predicate; restriction to
// a partial action happens in the closure/verification layers.

struct TranslateRational {  // x -> x + step on numeric points
  Rat step;
};

struct TranslateQuad {  // x -> x + step on numeric points
  Quad step;
};

// Finite lookup table extended by the identity off the listed domain. It is a
// genuine bijection of the ambient space iff the listed domain and range
// coincide as sets; is_valid_bijection reports that. Construction stays
// permissive so deliberately corrupted tables can be run through the
// partial-action axiom checker.
struct PermutationTable {
  std::vector<std::pair<Point, Point>> pairs;

  bool is_valid_bijection() const;
};

struct Shift {  // bit sequences: support s -> { i + offset : i in s }
  long long offset = 0;
};

struct ReverseMask {  // bit sequences: support -> support XOR mask
  Bits mask;
};

using Generator = std::variant<TranslateRational, TranslateQuad,
                               PermutationTable, Shift, ReverseMask>;

std::string generator_str(const Generator& g);

// Applies the (possibly inverted) generator. VariantMismatch when the kind
// cannot act on the point's kind.
Point apply_gen(const Generator& g, const Point& x, bool inverse = false);

// Word over a generator list: letters (generator index, sign) applied left to
// right, so {(0,+1),(1,-1)} means "apply g0, then g1^-1".
struct GroupWord {
  std::vector<std::pair<int, int>> letters;

  static GroupWord identity() { return {}; }
  static GroupWord single(int idx, int sign = 1) { return {{{idx, sign}}}; }
  GroupWord inverse() const;
  GroupWord then(const GroupWord& next) const;  // this first, then next
  bool operator==(const GroupWord& o) const { return letters == o.letters; }
};

Point apply_word(const GroupWord& w, const Point& x,
                 const std::vector<Generator>& gens);

std::string word_str(const GroupWord& w);

}  // namespace invprob
