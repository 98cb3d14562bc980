#include "detchern/sectional.hpp"

#include "detchern/errors.hpp"

namespace detchern {

DPoly involution_J(const DPoly& f) {
    // numerator t f(-1-t) + f(0); it vanishes at t = -1, so (1+t) divides
    DPoly num = DPoly::variable() * f.compose_affine(Rational(-1), Rational(-1)) + DPoly(f.coeff(0));
    if (num.eval(Rational(-1)) != 0) throw consistency_error("involution numerator not divisible by 1+t");
    const auto& nc = num.coeffs();
    std::vector<Rational> g(nc.size(), Rational(0));
    Rational prev(0);
    for (std::size_t i = 0; i < nc.size(); ++i) {
        prev = nc[i] - prev;
        g[i] = prev;
    }
    if (!g.empty() && g.back() != 0) throw consistency_error("involution division left a remainder");
    if (!g.empty()) g.pop_back();
    return DPoly(std::move(g));
}

DPoly gamma_of(const HClass& cls) {
    return reverse_poly(cls.to_poly(), static_cast<std::size_t>(cls.ambient()));
}

HClass csm_of(const RankLocusSpec& s, ClassVariant variant) {
    switch (variant) {
        case ClassVariant::Open: return csm_open(s);
        case ClassVariant::Closure: return csm_closure(s);
        case ClassVariant::Dense: return csm_dense(s.kind, s.n);
    }
    throw usage_error("unknown class variant");
}

DPoly chi_poly(const RankLocusSpec& s, ClassVariant variant) {
    return involution_J(gamma_of(csm_of(s, variant)));
}

DPoly gamma_polynomial(MatrixKind kind, int n, int corank) {
    return gamma_of(q_class(kind, n, corank));
}

DPoly chi_via_combination(const RankLocusSpec& s, ClassVariant variant) {
    s.validate();
    const long N = s.ambient();
    auto dense_chi = [&]() {
        // ambient minus every proper stratum, applied to J(gamma) termwise
        DPoly acc = involution_J(gamma_of(HClass::binomial_class(N)));
        for (int k : positive_coranks(s.kind, s.n))
            acc = acc - chi_via_combination({s.kind, s.n, k}, ClassVariant::Open);
        return acc;
    };
    if (variant == ClassVariant::Dense || s.is_dense()) {
        if (variant == ClassVariant::Open || variant == ClassVariant::Dense) return dense_chi();
        return involution_J(gamma_of(HClass::binomial_class(N)));
    }
    if (variant == ClassVariant::Open) {
        DPoly acc;
        for (const auto& [r, c] : csm_open_combination(s.kind, s.n, s.corank))
            acc = acc + involution_J(gamma_polynomial(s.kind, s.n, r)).scaled(Rational(c));
        return acc;
    }
    DPoly acc;
    for (int r : positive_coranks(s.kind, s.n))
        if (r >= s.corank) acc = acc + chi_via_combination({s.kind, s.n, r}, ClassVariant::Open);
    return acc;
}

std::vector<Integer> sectional_euler(const DPoly& chi) {
    std::vector<Integer> out;
    std::size_t top = chi.degree().value_or(0);
    for (std::size_t sidx = 0; sidx <= top; ++sidx) {
        Rational c = chi.coeff(sidx);
        if (sidx % 2) c = -c;
        if (!is_integer(c)) throw consistency_error("sectional Euler characteristic is not an integer");
        out.push_back(to_integer(c));
    }
    return out;
}

} // namespace detchern
