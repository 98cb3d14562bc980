#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detchern/reference.hpp"
#include "detchern/errors.hpp"
#include "detchern/strata.hpp"

using namespace detchern;

namespace {

HClass hc(MatrixKind kind, int n, std::vector<long> coeffs) {
    return reference::as_hclass(kind, n, coeffs);
}

} // namespace

TEST_CASE("Euler numbers") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(1) == 0);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(3) == 0);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
    CHECK(euler_number(10) == -50521);

    // recurrence: the even binomial convolution telescopes to zero
    for (long m = 1; m <= 8; ++m) {
        Integer acc = 0;
        for (long j = 0; j <= m; ++j) acc += binomial(2 * m, 2 * j) * euler_number(2 * j);
        CHECK(acc == 0);
    }
}

TEST_CASE("positive coranks per family") {
    CHECK(positive_coranks(MatrixKind::Ordinary, 4) == std::vector<int>{1, 2, 3});
    CHECK(positive_coranks(MatrixKind::Symmetric, 3) == std::vector<int>{1, 2});
    CHECK(positive_coranks(MatrixKind::Skew, 6) == std::vector<int>{2, 4});
    // skew corank 1 is dropped for odd sizes: its codimension is zero
    CHECK(positive_coranks(MatrixKind::Skew, 7) == std::vector<int>{3, 5});
    CHECK(positive_coranks(MatrixKind::Skew, 2).empty());
}

TEST_CASE("open stratum combinations") {
    using pairs = std::vector<std::pair<int, Integer>>;
    CHECK(csm_open_combination(MatrixKind::Ordinary, 4, 2) ==
          pairs{{2, Integer(1)}, {3, Integer(-3)}});
    CHECK(csm_open_combination(MatrixKind::Symmetric, 4, 2) ==
          pairs{{2, Integer(1)}, {3, Integer(-3)}});
    CHECK(csm_open_combination(MatrixKind::Skew, 6, 2) ==
          pairs{{2, Integer(1)}, {4, Integer(-6)}});
    CHECK(csm_open_combination(MatrixKind::Skew, 7, 3) ==
          pairs{{3, Integer(1)}, {5, Integer(-10)}});
}

TEST_CASE("CSM classes match the stored reference rows") {
    for (const auto& row : reference::csm_rows()) {
        CAPTURE(kind_name(row.kind));
        CAPTURE(row.n);
        CAPTURE(row.corank);
        RankLocusSpec spec{row.kind, row.n, row.corank};
        HClass got = row.variant == ClassVariant::Dense ? csm_dense(row.kind, row.n)
                     : row.variant == ClassVariant::Open ? csm_open(spec)
                                                         : csm_closure(spec);
        CHECK(got == hc(row.kind, row.n, row.coeffs));
    }
}

TEST_CASE("Mather classes of the reference loci") {
    CHECK(chern_mather({MatrixKind::Symmetric, 3, 1}) ==
          hc(MatrixKind::Symmetric, 3, {0, 3, 9, 10, 6, 3}));
    CHECK(chern_mather({MatrixKind::Symmetric, 4, 1}) ==
          hc(MatrixKind::Symmetric, 4, {0, 4, 24, 64, 104, 120, 104, 64, 24, 4}));
    CHECK(chern_mather({MatrixKind::Symmetric, 4, 2}) ==
          hc(MatrixKind::Symmetric, 4, {0, 0, 0, 10, 40, 72, 80, 60, 30, 10}));
    CHECK(chern_mather({MatrixKind::Skew, 6, 2}) ==
          hc(MatrixKind::Skew, 6,
             {0, 3, 36, 207, 744, 1863, 3448, 4881, 5382, 4649, 3126, 1605, 610, 165, 30}));
    CHECK(chern_mather({MatrixKind::Skew, 7, 3}) ==
          hc(MatrixKind::Skew, 7,
             {0, 0, 0, 14, 196, 1330, 5782, 17965, 42238, 77777, 114702, 137487, 135170,
              109459, 72946, 39739, 17458, 6055, 1610, 315, 42}));
    // the ordinary Mather class is the resolution pushforward itself
    CHECK(chern_mather({MatrixKind::Ordinary, 4, 2}) == q_class(MatrixKind::Ordinary, 4, 2));
}

TEST_CASE("closure classes of the reference loci") {
    CHECK(csm_closure({MatrixKind::Symmetric, 3, 1}) ==
          hc(MatrixKind::Symmetric, 3, {0, 3, 9, 14, 12, 6}));
    CHECK(csm_closure({MatrixKind::Symmetric, 4, 1}) ==
          hc(MatrixKind::Symmetric, 4, {0, 4, 24, 74, 144, 192, 176, 108, 42, 10}));
    CHECK(csm_closure({MatrixKind::Skew, 6, 2}) ==
          hc(MatrixKind::Skew, 6,
             {0, 3, 36, 207, 744, 1863, 3434, 4797, 5148, 4255, 2688, 1275, 440, 105, 15}));
    CHECK(csm_closure({MatrixKind::Skew, 7, 3}) ==
          hc(MatrixKind::Skew, 7,
             {0, 0, 0, 14, 196, 1330, 5782, 17965, 42238, 77777, 114660, 137193, 134204,
              107499, 70227, 37044, 15519, 5040, 1225, 210, 21}));
}

TEST_CASE("strata CSM classes sum to the ambient total Chern class") {
    for (MatrixKind kind :
         {MatrixKind::Ordinary, MatrixKind::Symmetric, MatrixKind::Skew})
        for (int n = 2; n <= 5; ++n) {
            if (kind == MatrixKind::Skew && n < 3) continue;
            CAPTURE(kind_name(kind));
            CAPTURE(n);
            HClass total = csm_dense(kind, n);
            for (int k : positive_coranks(kind, n)) total = total + csm_open({kind, n, k});
            CHECK(total == HClass::binomial_class(ambient_dim(kind, n)));
        }
}

TEST_CASE("hyperplane multiples of the dense class") {
    // H * csm(dense) recombines into the singular strata CSM classes
    auto shift = [](const HClass& cls, long scale) {
        const long N = cls.ambient();
        std::vector<Rational> c(static_cast<std::size_t>(N) + 1, Rational(0));
        for (long i = 1; i <= N; ++i)
            c[static_cast<std::size_t>(i)] =
                cls.coeff(static_cast<std::size_t>(i - 1)) * scale;
        return HClass(N, std::move(c));
    };

    CHECK(shift(csm_dense(MatrixKind::Symmetric, 3), 3) ==
          csm_open({MatrixKind::Symmetric, 3, 1}) +
              csm_open({MatrixKind::Symmetric, 3, 2}).scaled(Rational(2)));
    CHECK(shift(csm_dense(MatrixKind::Symmetric, 4), 4) ==
          csm_open({MatrixKind::Symmetric, 4, 1}) +
              csm_open({MatrixKind::Symmetric, 4, 2}).scaled(Rational(2)));
    CHECK(shift(csm_dense(MatrixKind::Skew, 6), 3) == csm_open({MatrixKind::Skew, 6, 2}));
}

TEST_CASE("smooth loci have equal Mather and CSM classes") {
    for (RankLocusSpec spec :
         {RankLocusSpec{MatrixKind::Ordinary, 2, 1}, RankLocusSpec{MatrixKind::Symmetric, 3, 2},
          RankLocusSpec{MatrixKind::Symmetric, 4, 3}, RankLocusSpec{MatrixKind::Skew, 6, 4},
          RankLocusSpec{MatrixKind::Skew, 7, 5}}) {
        CAPTURE(kind_name(spec.kind));
        CAPTURE(spec.n);
        CAPTURE(spec.corank);
        CHECK(chern_mather(spec) == csm_closure(spec));
        CHECK(csm_open(spec) == csm_closure(spec));
    }
}

TEST_CASE("codimension-zero loci behave as the dense stratum") {
    RankLocusSpec spec{MatrixKind::Skew, 7, 1};
    CHECK(spec.is_dense());
    CHECK(csm_open(spec) == csm_dense(MatrixKind::Skew, 7));
    CHECK(csm_closure(spec) == HClass::binomial_class(20));
    CHECK(chern_mather(spec) == HClass::binomial_class(20));
    CHECK_THROWS_AS(q_class(MatrixKind::Skew, 7, 1), usage_error);

    RankLocusSpec zero{MatrixKind::Ordinary, 3, 0};
    CHECK(zero.is_dense());
    CHECK(csm_closure(zero) == HClass::binomial_class(8));
}

TEST_CASE("degrees of the singular loci") {
    // top coefficient of the closure CSM class is the Euler characteristic
    CHECK(csm_closure({MatrixKind::Symmetric, 3, 1}).coeff(5) == 6);
    CHECK(csm_closure({MatrixKind::Skew, 6, 2}).coeff(14) == 15);
    CHECK(csm_closure({MatrixKind::Skew, 7, 3}).coeff(20) == 21);
}

TEST_CASE("seeding the memo validates the shape") {
    CHECK_THROWS_AS(seed_q_class(MatrixKind::Ordinary, 5, 1, HClass(3)), usage_error);
    std::vector<Rational> bad(static_cast<std::size_t>(ambient_dim(MatrixKind::Ordinary, 5)) + 1,
                              Rational(0));
    bad[0] = 7;
    CHECK_THROWS_AS(
        seed_q_class(MatrixKind::Ordinary, 5, 1, HClass(ambient_dim(MatrixKind::Ordinary, 5), bad)),
        usage_error);
    CHECK_THROWS_AS(seed_q_class(MatrixKind::Skew, 6, 3, HClass(14)), usage_error);
}
