#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "invprob/error.hpp"

namespace invprob {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rat_str(const Rat& r) { return r.str(); }

// Accepts "p", "p/q", optional leading '-'. Anything else is a parse error.
Rat parse_rat(const std::string& s);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace invprob
