#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "detchern/useries.hpp"

namespace detchern {

// Torus fixed point of G(r,n): an r-element subset of {1..n}, sorted ascending.
struct FixedPoint {
    int n = 0;
    int r = 0;
    std::vector<int> subset;
};

// all C(n,r) fixed points in lexicographic subset order
std::vector<FixedPoint> fixed_points(int n, int r);

// Torus weights t_1..t_n; localization results are independent of the choice
// as long as the entries are pairwise distinct.
struct WeightVector {
    std::vector<Rational> t;

    static WeightVector standard(int n); // t_i = i
    static WeightVector seeded(int n, unsigned long long seed);
    bool distinct() const;
};

// Equivariant bundle expression over G(r,n) built from the tautological
// sequence; supports rank and fixed-point root computation.
class BundleSymbol {
public:
    static BundleSymbol sub();                                 // S
    static BundleSymbol quot();                                // Q
    static BundleSymbol dual(BundleSymbol b);
    static BundleSymbol direct_sum_power(BundleSymbol b, int m);
    static BundleSymbol tensor(BundleSymbol a, BundleSymbol b);
    static BundleSymbol sym2(BundleSymbol b);
    static BundleSymbol wedge2(BundleSymbol b);

    long rank(int r, int n) const;
    // Chern roots evaluated at a fixed point: S has roots {t_i : i in subset},
    // Q has the complement; constructors act on the root multiset.
    std::vector<Rational> roots_at(const FixedPoint& fp, const WeightVector& w) const;

private:
    enum class Tag { Sub, Quot, Dual, Power, Tensor, Sym2, Wedge2 };
    Tag tag_ = Tag::Sub;
    int mult_ = 1;
    std::shared_ptr<const BundleSymbol> a_, b_;
};

// prod over roots of (1 + rho u), truncated
USeries total_chern(const std::vector<Rational>& roots, std::size_t trunc);
// prod over roots of (shift + rho u); shift is a polynomial in d
USeries affine_chern(const std::vector<Rational>& roots, const DPoly& shift, std::size_t trunc);
// inverse of the total Chern series
USeries segre_series(const std::vector<Rational>& roots, std::size_t trunc);
// e_i of the root multiset
Rational elementary_symmetric(const std::vector<Rational>& roots, long i);

// product of (t_j - t_i) over i in subset, j outside
Rational euler_denominator(const FixedPoint& fp, const WeightVector& w);

struct IntegrateOptions {
    bool allow_large = false; // lift the n <= 12 fixed-point-count guard
};

// Localization integral over G(r,n): sums integrand(fp)/euler_denominator(fp)
// over all fixed points, requires the u^0..u^{T-1} coefficients of the sum to
// vanish (T = r(n-r)) and returns the u^T coefficient.
DPoly integrate(int n, int r,
                const std::function<USeries(const FixedPoint&, const WeightVector&)>& integrand,
                const WeightVector& w, const IntegrateOptions& opts = {});
DPoly integrate(int n, int r,
                const std::function<USeries(const FixedPoint&, const WeightVector&)>& integrand);

} // namespace detchern
