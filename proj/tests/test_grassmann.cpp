#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "detchern/errors.hpp"
#include "detchern/grassmann.hpp"

using namespace detchern;

namespace {

// c(Hom(S,Q)) restricted to a fixed point, the standard Euler class integrand
USeries tangent_chern_integrand(const FixedPoint& fp, const WeightVector& w, std::size_t T) {
    auto tangent = BundleSymbol::tensor(BundleSymbol::dual(BundleSymbol::sub()),
                                        BundleSymbol::quot());
    return total_chern(tangent.roots_at(fp, w), T);
}

} // namespace

TEST_CASE("fixed points enumerate subsets in lexicographic order") {
    auto pts = fixed_points(4, 2);
    REQUIRE(pts.size() == 6);
    CHECK(pts.front().subset == std::vector<int>{1, 2});
    CHECK(pts[1].subset == std::vector<int>{1, 3});
    CHECK(pts.back().subset == std::vector<int>{3, 4});
    CHECK(fixed_points(5, 0).size() == 1);
    CHECK(fixed_points(5, 5).size() == 1);
}

TEST_CASE("bundle ranks follow the constructors") {
    auto S = BundleSymbol::sub();
    auto Q = BundleSymbol::quot();
    CHECK(S.rank(2, 5) == 2);
    CHECK(Q.rank(2, 5) == 3);
    CHECK(BundleSymbol::dual(Q).rank(2, 5) == 3);
    CHECK(BundleSymbol::direct_sum_power(Q, 4).rank(2, 5) == 12);
    CHECK(BundleSymbol::tensor(S, Q).rank(2, 5) == 6);
    CHECK(BundleSymbol::sym2(Q).rank(2, 5) == 6);
    CHECK(BundleSymbol::wedge2(Q).rank(2, 5) == 3);
}

TEST_CASE("roots of the symmetric square of the dual quotient") {
    FixedPoint fp{3, 1, {1}};
    WeightVector w;
    w.t = {Rational(1), Rational(2), Rational(3)};
    auto sym = BundleSymbol::sym2(BundleSymbol::dual(BundleSymbol::quot()));
    auto roots = sym.roots_at(fp, w);
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<Rational>{Rational(-6), Rational(-5), Rational(-4)});
}

TEST_CASE("tensor and wedge roots are pairwise sums") {
    FixedPoint fp{4, 2, {1, 3}};
    WeightVector w = WeightVector::standard(4);
    auto sd = BundleSymbol::dual(BundleSymbol::sub());
    auto q = BundleSymbol::quot();
    auto roots = BundleSymbol::tensor(sd, q).roots_at(fp, w);
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<Rational>{Rational(-1), Rational(1), Rational(1), Rational(3)});

    auto wroots = BundleSymbol::wedge2(q).roots_at(fp, w);
    REQUIRE(wroots.size() == 1);
    CHECK(wroots[0] == 6);
}

TEST_CASE("euler denominator multiplies the crossing weight differences") {
    FixedPoint fp{4, 2, {1, 2}};
    CHECK(euler_denominator(fp, WeightVector::standard(4)) == 12);
}

TEST_CASE("Euler characteristic of the Grassmannian by localization") {
    auto chi = [](int n, int r) {
        const std::size_t T = static_cast<std::size_t>(r) * (n - r);
        DPoly v = integrate(n, r, [T](const FixedPoint& fp, const WeightVector& w) {
            return tangent_chern_integrand(fp, w, T);
        });
        return v.coeff(0);
    };
    CHECK(chi(4, 2) == 6);
    CHECK(chi(5, 2) == 10);
    CHECK(chi(6, 3) == 20);
}

TEST_CASE("localization result does not depend on the weights") {
    const int n = 5, r = 2;
    const std::size_t T = static_cast<std::size_t>(r) * (n - r);
    auto integrand = [T](const FixedPoint& fp, const WeightVector& w) {
        auto sym = BundleSymbol::sym2(BundleSymbol::dual(BundleSymbol::quot()));
        USeries s = tangent_chern_integrand(fp, w, T);
        return s * total_chern(sym.roots_at(fp, w), T);
    };
    DPoly base = integrate(n, r, integrand);
    for (unsigned long long seed : {1ULL, 7ULL, 42ULL}) {
        WeightVector w = WeightVector::seeded(n, seed);
        REQUIRE(w.distinct());
        CHECK(integrate(n, r, integrand, w) == base);
    }
}

TEST_CASE("sums below the top degree must vanish") {
    // an integrand supported on a single fixed point breaks the identity
    int hits = 0;
    auto integrand = [&hits](const FixedPoint&, const WeightVector&) {
        USeries s(2);
        if (hits++ == 0) s.set_coeff(0, DPoly(1));
        return s;
    };
    CHECK_THROWS_AS(integrate(3, 1, integrand), consistency_error);
}

TEST_CASE("localization guards its inputs") {
    auto one2 = [](const FixedPoint&, const WeightVector&) { return USeries::one(2); };
    WeightVector dup;
    dup.t = {Rational(1), Rational(1), Rational(2)};
    CHECK_THROWS_AS(integrate(3, 1, one2, dup), usage_error);

    WeightVector short_w;
    short_w.t = {Rational(1)};
    CHECK_THROWS_AS(integrate(3, 1, one2, short_w), usage_error);

    auto one0 = [](const FixedPoint&, const WeightVector&) { return USeries::one(0); };
    CHECK_THROWS_AS(integrate(13, 1, one0, WeightVector::standard(13)), usage_error);
    IntegrateOptions opts;
    opts.allow_large = true;
    CHECK(integrate(13, 0, one0, WeightVector::standard(13), opts) == DPoly(1));
}

TEST_CASE("seeded weights are distinct and reproducible") {
    auto a = WeightVector::seeded(8, 99);
    auto b = WeightVector::seeded(8, 99);
    CHECK(a.t == b.t);
    CHECK(a.distinct());
    CHECK(a.t != WeightVector::seeded(8, 100).t);
}
