#include "detchern/cycles.hpp"

#include <algorithm>

#include "detchern/errors.hpp"

namespace detchern {

BiClass cycle_transform(const HClass& cls) {
    const long N = cls.ambient();
    // beta_l = coeff of H^{N-l}, l = 0..N
    std::vector<Rational> beta(static_cast<std::size_t>(N) + 1);
    for (long l = 0; l <= N; ++l) beta[l] = cls.coeff(static_cast<std::size_t>(N - l));
    BiClass out;
    out.n_ambient = N;
    out.c.assign(static_cast<std::size_t>(N), Rational(0));
    for (long j = 1; j <= N; ++j) {
        Rational acc(0);
        for (long l = j - 1; l <= N - 1; ++l) {
            Rational term = beta[l] * Rational(binomial(l + 1, j));
            acc += (l % 2) ? -term : term;
        }
        out.c[j - 1] = acc;
    }
    return out;
}

namespace {
void require_cycle_input(const RankLocusSpec& s) {
    s.validate();
    if (s.is_dense())
        throw usage_error("cycle classes are defined for proper subvarieties only");
}
} // namespace

BiClass conormal(const RankLocusSpec& s) {
    require_cycle_input(s);
    return cycle_transform(chern_mather(s));
}

BiClass characteristic(const RankLocusSpec& s) {
    require_cycle_input(s);
    return cycle_transform(csm_closure(s));
}

BiClass flip(const BiClass& b) {
    BiClass out = b;
    std::reverse(out.c.begin(), out.c.end());
    return out;
}

std::vector<Integer> polar_degrees(const RankLocusSpec& s) {
    BiClass con = conormal(s);
    const bool odd = s.dim() % 2;
    std::vector<Integer> out;
    for (const auto& cj : con.c) {
        Rational v = odd ? -cj : cj;
        if (v < 0) throw consistency_error("polar degree sign normalization failed");
        if (!is_integer(v)) throw consistency_error("polar degree is not an integer");
        out.push_back(to_integer(v));
    }
    return out;
}

Integer ged_double_sum(const RankLocusSpec& s) {
    require_cycle_input(s);
    HClass m = chern_mather(s);
    const long N = s.ambient();
    const long d = s.dim();
    std::vector<Rational> beta(static_cast<std::size_t>(N) + 1);
    for (long l = 0; l <= N; ++l) beta[l] = m.coeff(static_cast<std::size_t>(N - l));
    Rational tot(0);
    for (long l = 0; l <= d; ++l)
        for (long i = 0; i <= l; ++i) {
            Rational term = Rational(binomial(d + 1 - i, d + 1 - l)) * beta[d - i];
            tot += (i % 2) ? -term : term;
        }
    if (!is_integer(tot)) throw consistency_error("gED double sum is not an integer");
    return to_integer(tot);
}

Integer generic_ed_degree(const RankLocusSpec& s) {
    Integer ged = 0;
    for (const auto& p : polar_degrees(s)) ged += p;
    if (ged_double_sum(s) != ged)
        throw consistency_error("gED double-sum cross-check failed");
    return ged;
}

} // namespace detchern
