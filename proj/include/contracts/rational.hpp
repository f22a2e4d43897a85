// Exact rational scalar used for instance data and verification arithmetic.
//
// All instance payloads (costs, values, clause weights, tables) are stored as
// rationals so that the structured families and the verification suite can run
// with zero tolerance. Solvers work on double mirrors of the same data.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace contracts {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double to_double(const Rat& x);

/// Exact conversion: every finite double is a dyadic rational.
/// Throws std::invalid_argument on NaN/inf.
Rat rat_from_double(double x);

BigInt rat_floor(const Rat& x);
BigInt rat_ceil(const Rat& x);

/// Renders as an integer, a finite decimal (when the denominator is of the
/// form 2^a*5^b with at most 18 fractional digits), or "p/q".
std::string format_number(const Rat& x);

/// Always "n" or "p/q"; used where fraction output reads better (family reports).
std::string format_fraction(const Rat& x);

/// Accepts the three forms emitted by format_number. Throws std::invalid_argument.
Rat parse_number(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace contracts
