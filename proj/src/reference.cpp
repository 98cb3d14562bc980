#include "detchern/reference.hpp"

namespace detchern {
namespace reference {

namespace {
constexpr MatrixKind SYM = MatrixKind::Symmetric;
constexpr MatrixKind SKW = MatrixKind::Skew;
} // namespace

const std::vector<QRow>& q_rows() {
    static const std::vector<QRow> rows{
        {SKW, 6, 2, {0, 3, 36, 207, 744, 1863, 3504, 5217, 6318, 6225, 4878, 2925, 1290, 405, 90}},
        {SKW, 6, 4, {0, 0, 0, 0, 0, 0, 14, 84, 234, 394, 438, 330, 170, 60, 15}},
        {SKW, 7, 3, {0, 0, 0, 14, 196, 1330, 5782, 17965, 42238, 77777, 115038, 139839, 142898,
                     125139, 94698, 61299, 32970, 14175, 4690, 1155, 210}},
        {SKW, 7, 5, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 42, 294, 966, 1960, 2719, 2695, 1939, 1015,
                     385, 105, 21}},
        {SYM, 3, 1, {0, 3, 9, 18, 18, 9}},
        {SYM, 3, 2, {0, 0, 0, 4, 6, 3}},
        {SYM, 4, 1, {0, 4, 24, 84, 184, 264, 264, 184, 84, 24}},
        {SYM, 4, 2, {0, 0, 0, 10, 40, 72, 96, 92, 54, 18}},
        {SYM, 4, 3, {0, 0, 0, 0, 0, 0, 8, 16, 12, 4}},
    };
    return rows;
}

const std::vector<CsmRow>& csm_rows() {
    static const std::vector<CsmRow> rows{
        {SKW, 6, 0, ClassVariant::Dense,
         {1, 12, 69, 248, 621, 1140, 1571, 1638, 1287, 750, 315, 90, 15, 0, 0}},
        {SKW, 6, 2, ClassVariant::Open,
         {0, 3, 36, 207, 744, 1863, 3420, 4713, 4914, 3861, 2250, 945, 270, 45, 0}},
        {SKW, 6, 4, ClassVariant::Closure,
         {0, 0, 0, 0, 0, 0, 14, 84, 234, 394, 438, 330, 170, 60, 15}},
        {SKW, 7, 1, ClassVariant::Open,
         {1, 21, 210, 1316, 5789, 19019, 48482, 98315, 161252, 216153, 238056, 215523, 159726,
          95991, 46053, 17220, 4830, 945, 105, 0, 0}},
        {SKW, 7, 3, ClassVariant::Open,
         {0, 0, 0, 14, 196, 1330, 5782, 17965, 42238, 77777, 114618, 136899, 133238, 105539,
          67508, 34349, 13580, 4025, 840, 105, 0}},
        {SKW, 7, 5, ClassVariant::Closure,
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 42, 294, 966, 1960, 2719, 2695, 1939, 1015, 385, 105,
          21}},
        {SYM, 3, 0, ClassVariant::Dense, {1, 3, 6, 6, 3, 0}},
        {SYM, 3, 1, ClassVariant::Open, {0, 3, 9, 10, 6, 3}},
        {SYM, 3, 2, ClassVariant::Closure, {0, 0, 0, 4, 6, 3}},
        {SYM, 4, 0, ClassVariant::Dense, {1, 6, 21, 46, 66, 60, 34, 12, 3, 0}},
        {SYM, 4, 1, ClassVariant::Open, {0, 4, 24, 64, 104, 120, 96, 48, 12, 0}},
        {SYM, 4, 2, ClassVariant::Open, {0, 0, 0, 10, 40, 72, 72, 44, 18, 6}},
        {SYM, 4, 3, ClassVariant::Closure, {0, 0, 0, 0, 0, 0, 8, 16, 12, 4}},
    };
    return rows;
}

const std::vector<CycleRow>& cycle_rows() {
    static const std::vector<CycleRow> rows{
        {SYM, 3, 1, true, {3, 6, 8, 6, 3}},
        {SYM, 3, 2, true, {3, 6, 4, 0, 0}},
        {SYM, 3, 2, false, {3, 6, 4, 0, 0}},
        {SYM, 3, 1, false, {0, 0, 4, 6, 3}},
        {SYM, 4, 1, true, {4, 12, 26, 38, 42, 38, 26, 12, 4}},
        {SYM, 4, 2, true, {0, 0, 10, 30, 42, 30, 10, 0, 0}},
        {SYM, 4, 2, false, {0, 0, 10, 30, 42, 30, 10, 0, 0}},
        {SYM, 4, 3, true, {-4, -12, -16, -8, 0, 0, 0, 0, 0}},
        {SYM, 4, 3, false, {-4, -12, -16, -8, 0, 0, 0, 0, 0}},
        {SYM, 4, 1, false, {0, 0, 0, 0, 0, 8, 16, 12, 4}},
        {SKW, 6, 2, true, {-3, -6, -12, -24, -48, -82, -108, -108, -82, -48, -24, -12, -6, -3}},
        {SKW, 6, 4, true, {3, 6, 12, 24, 48, 68, 66, 42, 14, 0, 0, 0, 0, 0}},
        {SKW, 6, 4, false, {3, 6, 12, 24, 48, 68, 66, 42, 14, 0, 0, 0, 0, 0}},
        {SKW, 6, 2, false, {0, 0, 0, 0, 0, -14, -42, -66, -68, -48, -24, -12, -6, -3}},
        {SKW, 7, 3, true, {0, 0, -14, -56, -140, -266, -395, -434, -336, -210, -210, -336, -434,
                           -395, -266, -140, -56, -14, 0, 0}},
        {SKW, 7, 5, true, {0, 0, 14, 56, 140, 266, 395, 434, 336, 168, 42, 0, 0, 0, 0, 0, 0, 0,
                           0, 0}},
        {SKW, 7, 5, false, {0, 0, 14, 56, 140, 266, 395, 434, 336, 168, 42, 0, 0, 0, 0, 0, 0, 0,
                            0, 0}},
        {SKW, 7, 3, false, {0, 0, 0, 0, 0, 0, 0, 0, 0, -42, -168, -336, -434, -395, -266, -140,
                            -56, -14, 0, 0}},
    };
    return rows;
}

const std::vector<GedValue>& ged_values() {
    static const std::vector<GedValue> rows{
        {SYM, 3, 1, 13}, {SYM, 3, 2, 13},  {SYM, 4, 1, 40},  {SYM, 4, 2, 122}, {SYM, 4, 3, 40},
        {SKW, 6, 2, 283}, {SKW, 6, 4, 283}, {SKW, 7, 3, 1851}, {SKW, 7, 5, 1851},
    };
    return rows;
}

HClass as_hclass(MatrixKind kind, int n, const std::vector<long>& coeffs) {
    const long N = ambient_dim(kind, n);
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size() && i < c.size(); ++i) c[i] = Rational(coeffs[i]);
    return HClass(N, std::move(c));
}

BiClass as_biclass(MatrixKind kind, int n, const std::vector<long>& entries) {
    BiClass out;
    out.n_ambient = ambient_dim(kind, n);
    for (long v : entries) out.c.emplace_back(v);
    out.c.resize(static_cast<std::size_t>(out.n_ambient), Rational(0));
    return out;
}

} // namespace reference
} // namespace detchern
