#pragma once

#include <vector>

#include "detchern/dpoly.hpp"

namespace detchern {

// Truncated power series in u with DPoly coefficients; exactly trunc+1
// coefficients are stored (u^0 .. u^trunc). All arithmetic requires matching
// truncation orders.
class USeries {
public:
    explicit USeries(std::size_t trunc);
    static USeries one(std::size_t trunc);

    std::size_t trunc() const { return c_.size() - 1; }
    const DPoly& coeff(std::size_t i) const { return c_[i]; }
    void set_coeff(std::size_t i, DPoly p) { c_[i] = std::move(p); }

    USeries operator+(const USeries& o) const;
    USeries operator*(const USeries& o) const;
    USeries scaled(const Rational& s) const;
    // multiply by the linear factor (a + b u)
    USeries times_linear(const DPoly& a, const DPoly& b) const;
    // multiplicative inverse; pre: constant term is a nonzero scalar
    USeries inverse() const;
    bool operator==(const USeries& o) const { return c_ == o.c_; }

private:
    std::vector<DPoly> c_;
};

} // namespace detchern
