#ifndef QUIVERLAB_NUMERIC_HPP
#define QUIVERLAB_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace quiverlab {

// All combinatorial and form arithmetic runs on arbitrary-precision
// integers; coefficients of formal linear combinations are exact rationals.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;  // dimension vectors and reflection arithmetic
using RatVec = std::vector<Rat>;  // per-vertex weights

/// Parses a (possibly signed) decimal integer. Throws ParseError on junk.
Int parse_int(std::string_view token);

/// Parses "p" or "p/q" with q a positive decimal integer; result is canonical.
Rat parse_rational(std::string_view token);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

/// Checked narrowing for JSON emission and loop/arrow counts.
long to_long(const Int& n);

bool all_nonnegative(const IntVec& v);
bool is_zero(const IntVec& v);
Int gcd(const IntVec& v);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);

/// Componentwise a <= b.
bool leq(const IntVec& a, const IntVec& b);

std::string format_vector(const IntVec& v);  // "(1,0,2)"

}  // namespace quiverlab

#endif
