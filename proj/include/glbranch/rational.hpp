#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace glb {

using Int = boost::multiprecision::cpp_int;
// Exact rational scalar, always in lowest terms with positive denominator.
// No floating point anywhere in the library.
using Rat = boost::multiprecision::cpp_rational;

bool is_integer(const Rat& r);

// Throws std::invalid_argument if r is not an integer.
Int as_integer(const Rat& r);
long as_long(const Rat& r);

// Accepts "a" or "a/b" with optional leading sign; b > 0 after reduction.
Rat parse_rat(std::string_view s);
std::string format_rat(const Rat& r);

Int binomial(long n, long k);

}  // namespace glb
