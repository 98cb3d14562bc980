#pragma once

#include <optional>
#include <vector>

#include "detchern/numeric.hpp"

namespace detchern {

// Dense univariate polynomial over Rational, coefficient i = coefficient of x^i.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class DPoly {
public:
    DPoly() = default;
    DPoly(long c) : DPoly(Rational(c)) {}
    explicit DPoly(const Rational& c);
    explicit DPoly(std::vector<Rational> coeffs);

    static DPoly variable();
    static DPoly monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    // nullopt for the zero polynomial
    std::optional<std::size_t> degree() const;
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    DPoly operator+(const DPoly& o) const;
    DPoly operator-(const DPoly& o) const;
    DPoly operator*(const DPoly& o) const;
    DPoly scaled(const Rational& s) const;
    bool operator==(const DPoly& o) const { return c_ == o.c_; }

    Rational eval(const Rational& x) const;
    // f(a + b x)
    DPoly compose_affine(const Rational& a, const Rational& b) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// x^n * f(1/x); pre: deg f <= n
DPoly reverse_poly(const DPoly& f, std::size_t n);

} // namespace detchern
