#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace detchern {

// Exact arithmetic: Integer is arbitrary precision, Rational is always kept
// reduced with positive denominator (canonical form maintained by the backend).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binomial(n, k) = 0 whenever k < 0 or k > n (including negative n with k >= 0).
Integer binomial(long n, long k);

Integer int_pow(const Integer& base, unsigned long exp);
Rational rat_pow(const Rational& base, unsigned long exp);

bool is_integer(const Rational& x);
// pre: is_integer(x)
Integer to_integer(const Rational& x);

// "a" when integral, "a/b" otherwise; exact decimal digits, no rounding.
std::string to_decimal(const Rational& x);
std::string to_decimal(const Integer& x);

} // namespace detchern
