#include "invprob/zset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "invprob/error.hpp"

namespace invprob {
namespace {

// Caps on half-line bounds, sparse offsets and translation amounts.  With
// parameters this small every cross-offset sparse intersection is settled by
// the in-range catalog (the next double exponential past 2^32 is 2^64, and
// square gaps near it exceed any representable offset difference), so the
// case analysis below is exact, not approximate.
constexpr long long kMaxParam = 1LL << 30;
constexpr std::size_t kMaxEnum = 2'000'000;

const long long kDoubleExp[] = {4LL, 16LL, 256LL, 65536LL, 4294967296LL};

bool shas(const std::vector<long long>& v, long long x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<long long> snorm(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<long long> smerge(const std::vector<long long>& a,
                              const std::vector<long long>& b) {
  std::vector<long long> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<long long> serase(const std::vector<long long>& a,
                              const std::vector<long long>& b) {
  std::vector<long long> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

void check_param(long long x, const char* what) {
  if (x > kMaxParam || x < -kMaxParam)
    fail(Errc::invalid_argument,
         std::string(what) + " magnitude exceeds 2^30: " + std::to_string(x));
}

unsigned long long isqrt_ull(unsigned long long y) {
  auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(y)));
  while (r > 0 && r * r > y) --r;
  while ((r + 1) * (r + 1) <= y) ++r;
  return r;
}

bool perfect_square(__int128 y, long long* root) {
  if (y < 1) return false;
  unsigned long long r = isqrt_ull(static_cast<unsigned long long>(y));
  if (static_cast<__int128>(r) * static_cast<__int128>(r) != y) return false;
  if (root) *root = static_cast<long long>(r);
  return true;
}

std::string join_ll(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

bool ZSet::BaseSet::contains(long long x) const {
  switch (kind) {
    case BaseKind::Cofinite:
      return !shas(excluded, x);
    case BaseKind::HalfLeft:
      return x < bound;
    case BaseKind::HalfRight:
      return x >= bound;
    case BaseKind::Sparse: {
      __int128 y = static_cast<__int128>(x) - offset;
      if (sparse == SparseKind::DoubleExp) {
        for (long long v : kDoubleExp)
          if (y == v) return true;
        return false;  // next catalog value is 2^64, beyond any long long - offset
      }
      return perfect_square(y, nullptr);
    }
  }
  return false;
}

bool ZSet::BaseSet::operator==(const BaseSet& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case BaseKind::Cofinite:
      return excluded == o.excluded;
    case BaseKind::HalfLeft:
    case BaseKind::HalfRight:
      return bound == o.bound;
    case BaseKind::Sparse:
      return sparse == o.sparse && offset == o.offset;
  }
  return false;
}

void ZSet::normalize() {
  finite_ = snorm(std::move(finite_));
  removed_ = snorm(std::move(removed_));
  std::vector<BaseSet> uniq;
  for (const auto& c : infinite_) {
    bool dup = false;
    for (const auto& u : uniq)
      if (u == c) { dup = true; break; }
    if (!dup) uniq.push_back(c);
  }
  infinite_.swap(uniq);

  auto covered = [&](long long x) {
    for (const auto& c : infinite_)
      if (c.contains(x)) return true;
    return false;
  };
  std::vector<long long> fin0 = finite_, rem0 = removed_;
  removed_.clear();
  for (long long x : rem0)
    if (covered(x) && !shas(fin0, x)) removed_.push_back(x);
  finite_.clear();
  for (long long x : fin0)
    if (!covered(x) || shas(rem0, x)) finite_.push_back(x);
}

ZSet ZSet::finite(std::vector<long long> elems) {
  ZSet z;
  z.finite_ = snorm(std::move(elems));
  return z;
}

ZSet ZSet::cofinite(std::vector<long long> excluded) {
  ZSet z;
  BaseSet b;
  b.kind = BaseKind::Cofinite;
  b.excluded = snorm(std::move(excluded));
  z.infinite_.push_back(std::move(b));
  return z;
}

ZSet ZSet::half_left(long long n) {
  check_param(n, "half-line bound");
  ZSet z;
  BaseSet b;
  b.kind = BaseKind::HalfLeft;
  b.bound = n;
  z.infinite_.push_back(b);
  return z;
}

ZSet ZSet::half_right(long long n) {
  check_param(n, "half-line bound");
  ZSet z;
  BaseSet b;
  b.kind = BaseKind::HalfRight;
  b.bound = n;
  z.infinite_.push_back(b);
  return z;
}

ZSet ZSet::sparse(SparseKind kind, long long offset) {
  check_param(offset, "sparse offset");
  ZSet z;
  BaseSet b;
  b.kind = BaseKind::Sparse;
  b.sparse = kind;
  b.offset = offset;
  z.infinite_.push_back(b);
  return z;
}

ZSet ZSet::with_added(std::vector<long long> elems) const {
  ZSet z = *this;
  elems = snorm(std::move(elems));
  z.removed_ = serase(z.removed_, elems);
  z.finite_ = smerge(z.finite_, elems);
  z.normalize();
  return z;
}

ZSet ZSet::with_removed(std::vector<long long> elems) const {
  ZSet z = *this;
  elems = snorm(std::move(elems));
  z.finite_ = serase(z.finite_, elems);
  z.removed_ = smerge(z.removed_, elems);
  z.normalize();
  return z;
}

bool ZSet::contains(long long x) const {
  if (shas(finite_, x)) return true;
  for (const auto& c : infinite_)
    if (c.contains(x)) return !shas(removed_, x);
  return false;
}

bool ZSet::is_empty() const { return finite_.empty() && infinite_.empty(); }

std::size_t ZSet::size() const {
  if (!is_finite()) fail(Errc::invalid_argument, "size() of an infinite set");
  return finite_.size();
}

std::vector<long long> ZSet::elements() const {
  if (!is_finite())
    fail(Errc::invalid_argument, "elements() of an infinite set");
  return finite_;
}

bool ZSet::infinitely_many_positive() const {
  for (const auto& c : infinite_)
    if (c.kind != BaseKind::HalfLeft) return true;
  return false;
}

std::vector<long long> ZSet::positive_elements() const {
  if (infinitely_many_positive())
    fail(Errc::invalid_argument, "positive part is infinite");
  std::vector<long long> out;
  for (long long x : finite_)
    if (x > 0) out.push_back(x);
  for (const auto& c : infinite_) {
    if (c.bound <= 1) continue;
    if (static_cast<unsigned long long>(c.bound - 1) > kMaxEnum)
      fail(Errc::unsupported_shape, "half-line positive part too wide");
    for (long long x = 1; x < c.bound; ++x)
      if (!shas(removed_, x)) out.push_back(x);
  }
  return snorm(std::move(out));
}

ZSet ZSet::translated(long long t) const {
  check_param(t, "translation amount");
  auto shift = [&](long long x) {
    __int128 y = static_cast<__int128>(x) + t;
    if (y > INT64_MAX || y < INT64_MIN)
      fail(Errc::invalid_argument, "translated member overflows");
    return static_cast<long long>(y);
  };
  ZSet z;
  for (long long x : finite_) z.finite_.push_back(shift(x));
  for (long long x : removed_) z.removed_.push_back(shift(x));
  for (BaseSet c : infinite_) {
    switch (c.kind) {
      case BaseKind::Cofinite:
        for (auto& e : c.excluded) e = shift(e);
        c.excluded = snorm(std::move(c.excluded));
        break;
      case BaseKind::HalfLeft:
      case BaseKind::HalfRight:
        check_param(c.bound + t, "translated half-line bound");
        c.bound += t;
        break;
      case BaseKind::Sparse:
        check_param(c.offset + t, "translated sparse offset");
        c.offset += t;
        break;
    }
    z.infinite_.push_back(std::move(c));
  }
  z.normalize();
  return z;
}

std::vector<long long> ZSet::base_below(const BaseSet& b, long long hi) {
  if (b.kind != BaseKind::Sparse)
    fail(Errc::internal, "base_below supports sparse bases only");
  std::vector<long long> out;
  if (b.sparse == SparseKind::DoubleExp) {
    for (long long v : kDoubleExp)
      if (v + b.offset < hi) out.push_back(v + b.offset);
    return out;
  }
  for (long long k = 1;; ++k) {
    long long val = k * k + b.offset;
    if (val >= hi) break;
    out.push_back(val);
    if (out.size() > kMaxEnum)
      fail(Errc::unsupported_shape, "square catalog enumeration too wide");
  }
  return out;
}

namespace {

using BaseSet = ZSet::BaseSet;
using BaseKind = ZSet::BaseKind;
using SparseKind = ZSet::SparseKind;

// Does base I sit inside sparse base J (as full mathematical sets)?
bool sparse_covers(const BaseSet& I, const BaseSet& J) {
  if (I.kind != BaseKind::Sparse) return false;
  if (I.sparse == J.sparse) return I.offset == J.offset;
  // every double exponential 2^(2^k), k>=1, is the square of 2^(2^(k-1))
  return I.sparse == SparseKind::DoubleExp &&
         J.sparse == SparseKind::Squares && I.offset == J.offset;
}

ZSet intersect_sparse_pair(const BaseSet& a, const BaseSet& b) {
  if (a.sparse == b.sparse) {
    if (a.offset == b.offset) return ZSet::sparse(a.sparse, a.offset);
    std::vector<long long> members;
    if (a.sparse == SparseKind::DoubleExp) {
      for (long long v1 : kDoubleExp)
        for (long long v2 : kDoubleExp)
          if (v1 + a.offset == v2 + b.offset) members.push_back(v1 + a.offset);
    } else {
      // j^2 + a.off = i^2 + b.off  =>  (j-i)(j+i) = b.off - a.off != 0
      long long delta = b.offset - a.offset;
      const BaseSet& big = delta > 0 ? a : b;  // side with the larger square
      long long D = delta > 0 ? delta : -delta;
      for (long long u = 1; u * u <= D; ++u) {
        if (D % u) continue;
        long long v = D / u;
        if ((u + v) % 2) continue;
        long long j = (u + v) / 2, i = (v - u) / 2;
        if (i >= 1 && j >= 1) members.push_back(j * j + big.offset);
      }
    }
    return ZSet::finite(std::move(members));
  }
  const BaseSet& de = a.sparse == SparseKind::DoubleExp ? a : b;
  const BaseSet& sq = a.sparse == SparseKind::DoubleExp ? b : a;
  if (de.offset == sq.offset) return ZSet::sparse(SparseKind::DoubleExp, de.offset);
  std::vector<long long> members;
  for (long long v : kDoubleExp) {
    __int128 y = static_cast<__int128>(v) + de.offset - sq.offset;
    if (perfect_square(y, nullptr)) members.push_back(v + de.offset);
  }
  return ZSet::finite(std::move(members));
}

ZSet intersect_bases(const BaseSet& x, const BaseSet& y) {
  const BaseSet& a = x.kind <= y.kind ? x : y;
  const BaseSet& b = x.kind <= y.kind ? y : x;
  switch (a.kind) {
    case BaseKind::Cofinite:
      switch (b.kind) {
        case BaseKind::Cofinite:
          return ZSet::cofinite(smerge(a.excluded, b.excluded));
        case BaseKind::HalfLeft: {
          std::vector<long long> carve;
          for (long long e : a.excluded)
            if (e < b.bound) carve.push_back(e);
          return ZSet::half_left(b.bound).with_removed(std::move(carve));
        }
        case BaseKind::HalfRight: {
          std::vector<long long> carve;
          for (long long e : a.excluded)
            if (e >= b.bound) carve.push_back(e);
          return ZSet::half_right(b.bound).with_removed(std::move(carve));
        }
        case BaseKind::Sparse: {
          std::vector<long long> carve;
          for (long long e : a.excluded)
            if (b.contains(e)) carve.push_back(e);
          return ZSet::sparse(b.sparse, b.offset).with_removed(std::move(carve));
        }
      }
      break;
    case BaseKind::HalfLeft:
      switch (b.kind) {
        case BaseKind::HalfLeft:
          return ZSet::half_left(std::min(a.bound, b.bound));
        case BaseKind::HalfRight: {
          if (b.bound >= a.bound) return ZSet();
          if (static_cast<unsigned long long>(a.bound - b.bound) > kMaxEnum)
            fail(Errc::unsupported_shape, "half-line window too wide");
          std::vector<long long> members;
          for (long long v = b.bound; v < a.bound; ++v) members.push_back(v);
          return ZSet::finite(std::move(members));
        }
        case BaseKind::Sparse:
          return ZSet::finite(ZSet::base_below(b, a.bound));
        default:
          break;
      }
      break;
    case BaseKind::HalfRight:
      switch (b.kind) {
        case BaseKind::HalfRight:
          return ZSet::half_right(std::max(a.bound, b.bound));
        case BaseKind::Sparse:
          return ZSet::sparse(b.sparse, b.offset)
              .with_removed(ZSet::base_below(b, a.bound));
        default:
          break;
      }
      break;
    case BaseKind::Sparse:
      return intersect_sparse_pair(a, b);
  }
  fail(Errc::internal, "unhandled base intersection");
}

}  // namespace

ZSet ZSet::intersect(const ZSet& a, const ZSet& b) {
  ZSet out;
  std::vector<long long> carves;
  for (const auto& I : a.infinite_)
    for (const auto& J : b.infinite_) {
      ZSet frag = intersect_bases(I, J);
      for (auto& c : frag.infinite_) out.infinite_.push_back(std::move(c));
      carves.insert(carves.end(), frag.removed_.begin(), frag.removed_.end());
      out.finite_.insert(out.finite_.end(), frag.finite_.begin(),
                         frag.finite_.end());
    }
  carves.insert(carves.end(), a.removed_.begin(), a.removed_.end());
  carves.insert(carves.end(), b.removed_.begin(), b.removed_.end());
  // points the fragments miscount are settled by full membership
  std::vector<long long> fin = out.finite_, rem;
  for (long long xv : snorm(std::move(carves))) {
    if (a.contains(xv) && b.contains(xv))
      fin.push_back(xv);
    else
      rem.push_back(xv);
  }
  for (long long xv : a.finite_)
    if (b.contains(xv)) fin.push_back(xv);
  for (long long xv : b.finite_)
    if (a.contains(xv)) fin.push_back(xv);
  rem = snorm(std::move(rem));
  out.finite_ = serase(snorm(std::move(fin)), rem);
  out.removed_ = std::move(rem);
  out.normalize();
  return out;
}

ZSet ZSet::unite(const ZSet& a, const ZSet& b) {
  ZSet out;
  out.infinite_ = a.infinite_;
  out.infinite_.insert(out.infinite_.end(), b.infinite_.begin(),
                       b.infinite_.end());
  out.finite_ = smerge(a.finite_, b.finite_);
  for (long long xv : smerge(a.removed_, b.removed_))
    if (!a.contains(xv) && !b.contains(xv)) out.removed_.push_back(xv);
  out.normalize();
  return out;
}

std::optional<ZSet> ZSet::difference(const ZSet& a, const ZSet& b) {
  ZSet d = a;
  std::vector<const BaseSet*> halves, sparses;
  for (const auto& J : b.infinite_) {
    switch (J.kind) {
      case BaseKind::Cofinite: {
        // d minus a cofinite set collapses to finitely many points
        std::vector<long long> members;
        for (long long e : J.excluded)
          if (d.contains(e)) members.push_back(e);
        d = ZSet::finite(std::move(members));
        break;
      }
      case BaseKind::HalfLeft:
      case BaseKind::HalfRight:
        halves.push_back(&J);
        break;
      case BaseKind::Sparse:
        sparses.push_back(&J);
        break;
    }
  }
  for (const BaseSet* J : halves)
    d = intersect(d, J->kind == BaseKind::HalfLeft ? half_right(J->bound)
                                                   : half_left(J->bound));
  if (!sparses.empty()) {
    auto in_some_sparse = [&](long long xv) {
      for (const BaseSet* J : sparses)
        if (J->contains(xv)) return true;
      return false;
    };
    std::vector<long long> fin;
    for (long long xv : d.finite_)
      if (!in_some_sparse(xv)) fin.push_back(xv);
    std::vector<BaseSet> comps;
    std::vector<long long> rem = d.removed_;
    for (const auto& I : d.infinite_) {
      bool gone = false;
      for (const BaseSet* J : sparses)
        if (sparse_covers(I, *J)) { gone = true; break; }
      if (gone) continue;
      for (const BaseSet* J : sparses) {
        ZSet frag = intersect_bases(I, *J);
        if (!frag.is_finite()) return std::nullopt;
        auto m = frag.elements();
        rem.insert(rem.end(), m.begin(), m.end());
      }
      comps.push_back(I);
    }
    d.finite_ = std::move(fin);
    d.infinite_ = std::move(comps);
    d.removed_ = std::move(rem);
    d.normalize();
  }
  std::vector<long long> backs;
  for (long long xv : b.removed_)
    if (a.contains(xv)) backs.push_back(xv);
  d = d.with_added(std::move(backs));
  d = d.with_removed(b.finite_);
  return d;
}

std::optional<ZSet> ZSet::complement() const {
  ZSet acc = cofinite({});
  for (const auto& c : infinite_) {
    switch (c.kind) {
      case BaseKind::Cofinite:
        acc = intersect(acc, finite(c.excluded));
        break;
      case BaseKind::HalfLeft:
        acc = intersect(acc, half_right(c.bound));
        break;
      case BaseKind::HalfRight:
        acc = intersect(acc, half_left(c.bound));
        break;
      case BaseKind::Sparse:
        return std::nullopt;
    }
  }
  acc = unite(acc, finite(removed_));
  return acc.with_removed(finite_);
}

bool ZSet::subset(const ZSet& a, const ZSet& b) {
  auto d = difference(a, b);
  // an unrepresentable difference always has an infinite remainder
  return d ? d->is_empty() : false;
}

bool ZSet::disjoint(const ZSet& a, const ZSet& b) {
  return intersect(a, b).is_empty();
}

bool ZSet::equal(const ZSet& a, const ZSet& b) {
  return subset(a, b) && subset(b, a);
}

std::string ZSet::str() const {
  if (infinite_.empty()) return "finite:[" + join_ll(finite_) + "]";
  std::string s;
  for (std::size_t i = 0; i < infinite_.size(); ++i) {
    if (i) s += " | ";
    const auto& c = infinite_[i];
    switch (c.kind) {
      case BaseKind::Cofinite:
        s += "cofinite-ex:[" + join_ll(c.excluded) + "]";
        break;
      case BaseKind::HalfLeft:
        s += "Lm:" + std::to_string(c.bound);
        break;
      case BaseKind::HalfRight:
        s += "Rn:" + std::to_string(c.bound);
        break;
      case BaseKind::Sparse:
        s += c.sparse == SparseKind::DoubleExp ? "sparse:double-exp"
                                               : "sparse:squares";
        if (c.offset > 0) s += "+" + std::to_string(c.offset);
        if (c.offset < 0) s += std::to_string(c.offset);
        break;
    }
  }
  if (!removed_.empty()) s += " remove:[" + join_ll(removed_) + "]";
  if (!finite_.empty()) s += " add:[" + join_ll(finite_) + "]";
  return s;
}

namespace {

long long parse_ll(const std::string& tok) {
  if (tok.empty()) fail(Errc::parse_error, "empty integer literal");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(Errc::parse_error, "bad integer literal: " + tok);
  }
  if (pos != tok.size()) fail(Errc::parse_error, "bad integer literal: " + tok);
  return v;
}

std::vector<long long> parse_list(const std::string& body) {
  std::vector<long long> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_ll(item));
  return out;
}

// expects "prefix[...]": returns the bracket body
std::string bracket_body(const std::string& tok, const std::string& prefix) {
  if (tok.size() < prefix.size() + 2 || tok.compare(0, prefix.size(), prefix) ||
      tok[prefix.size()] != '[' || tok.back() != ']')
    fail(Errc::parse_error, "malformed list token: " + tok);
  return tok.substr(prefix.size() + 1, tok.size() - prefix.size() - 2);
}

ZSet parse_base(const std::string& tok) {
  if (tok.rfind("finite:", 0) == 0)
    return ZSet::finite(parse_list(bracket_body(tok, "finite:")));
  if (tok.rfind("cofinite-ex:", 0) == 0)
    return ZSet::cofinite(parse_list(bracket_body(tok, "cofinite-ex:")));
  if (tok.rfind("Lm:", 0) == 0) return ZSet::half_left(parse_ll(tok.substr(3)));
  if (tok.rfind("Rn:", 0) == 0) return ZSet::half_right(parse_ll(tok.substr(3)));
  if (tok.rfind("sparse:", 0) == 0) {
    std::string rest = tok.substr(7);
    ZSet::SparseKind kind;
    std::string name;
    if (rest.rfind("double-exp", 0) == 0) {
      kind = ZSet::SparseKind::DoubleExp;
      name = "double-exp";
    } else if (rest.rfind("squares", 0) == 0) {
      kind = ZSet::SparseKind::Squares;
      name = "squares";
    } else {
      fail(Errc::parse_error, "unknown sparse catalog: " + tok);
    }
    std::string suffix = rest.substr(name.size());
    long long offset = 0;
    if (!suffix.empty()) {
      if (suffix[0] != '+' && suffix[0] != '-')
        fail(Errc::parse_error, "bad sparse offset: " + tok);
      offset = parse_ll(suffix[0] == '+' ? suffix.substr(1) : suffix);
    }
    return ZSet::sparse(kind, offset);
  }
  fail(Errc::parse_error, "unknown set literal: " + tok);
}

}  // namespace

ZSet ZSet::parse(const std::string& literal) {
  ZSet acc;
  bool first = true;
  std::stringstream groups(literal);
  std::string group;
  while (std::getline(groups, group, '|')) {
    std::stringstream toks(group);
    std::string tok;
    std::vector<std::string> parts;
    while (toks >> tok) parts.push_back(tok);
    if (parts.empty()) fail(Errc::parse_error, "empty set literal group");
    ZSet base = parse_base(parts[0]);
    std::vector<long long> adds, removes;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i].rfind("add:", 0) == 0) {
        auto v = parse_list(bracket_body(parts[i], "add:"));
        adds.insert(adds.end(), v.begin(), v.end());
      } else if (parts[i].rfind("remove:", 0) == 0) {
        auto v = parse_list(bracket_body(parts[i], "remove:"));
        removes.insert(removes.end(), v.begin(), v.end());
      } else {
        fail(Errc::parse_error, "unexpected token in set literal: " + parts[i]);
      }
    }
    acc = first ? base : unite(acc, base);
    first = false;
    if (!removes.empty()) acc = acc.with_removed(std::move(removes));
    if (!adds.empty()) acc = acc.with_added(std::move(adds));
  }
  if (first) fail(Errc::parse_error, "empty set literal");
  return acc;
}

}  // namespace invprob
