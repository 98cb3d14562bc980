#include "detchern/numeric.hpp"

namespace detchern {

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

Integer int_pow(const Integer& base, unsigned long exp) {
    Integer acc = 1, b = base;
    for (; exp; exp >>= 1) {
        if (exp & 1) acc *= b;
        b *= b;
    }
    return acc;
}

Rational rat_pow(const Rational& base, unsigned long exp) {
    Rational acc = 1, b = base;
    for (; exp; exp >>= 1) {
        if (exp & 1) acc *= b;
        b *= b;
    }
    return acc;
}

bool is_integer(const Rational& x) {
    return denominator(x) == 1;
}

Integer to_integer(const Rational& x) {
    return numerator(x);
}

std::string to_decimal(const Rational& x) {
    if (is_integer(x)) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

std::string to_decimal(const Integer& x) {
    return x.str();
}

} // namespace detchern
