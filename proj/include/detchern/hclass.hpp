#pragma once

#include <vector>

#include "detchern/dpoly.hpp"

namespace detchern {

// Class in the Chow ring of P^N modulo H^{N+1}: exactly N+1 coefficients,
// index k = coefficient of H^k.
class HClass {
public:
    explicit HClass(long n_ambient);
    HClass(long n_ambient, std::vector<Rational> coeffs); // pre: coeffs.size() == N+1
    // pre: deg f <= N
    static HClass from_poly(const DPoly& f, long n_ambient);
    // (1+H)^{N+1} truncated at H^N
    static HClass binomial_class(long n_ambient);

    long ambient() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& coeff(std::size_t k) const { return c_[k]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    DPoly to_poly() const { return DPoly(c_); }

    HClass operator+(const HClass& o) const;
    HClass operator-(const HClass& o) const;
    HClass scaled(const Rational& s) const;
    bool operator==(const HClass& o) const { return c_ == o.c_; }

    bool is_integral() const;

private:
    std::vector<Rational> c_;
};

// truncated polynomial arithmetic mod H^{K+1} on raw coefficient vectors
std::vector<Rational> mul_mod(const std::vector<Rational>& a, const std::vector<Rational>& b,
                              std::size_t top);
// (1 + s H)^{-m} mod H^{top+1}
std::vector<Rational> geometric_inverse_pow(const Rational& s, unsigned long m, std::size_t top);

} // namespace detchern
