#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace csf {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar.  cpp_rational keeps itself in lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Coeff = boost::multiprecision::cpp_rational;

inline bool is_integer(const Coeff& q) { return denominator(q) == 1; }

BigInt factorial(int n);

// "7", "-17", "-3/2"
std::string coeff_to_string(const Coeff& q);

} // namespace csf
