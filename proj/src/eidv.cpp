#include "detchern/eidv.hpp"

#include "detchern/errors.hpp"

namespace detchern {

void EIDVSpec::validate() const {
    locus.validate();
    if (map_degree < 1) throw usage_error("map degree must be at least 1");
    if (target_dim < 0 || target_dim > locus.ambient())
        throw usage_error("target dimension must lie in [0, ambient dim of the matrix space]");
}

HClass eidv_csm(const EIDVSpec& e, ClassVariant variant) {
    e.validate();
    const long M = e.locus.ambient();
    const long N = e.target_dim;
    const Rational d(e.map_degree);
    const std::size_t top = static_cast<std::size_t>(N);

    HClass cls = csm_of(e.locus, variant);
    std::vector<Rational> scaled(top + 1, Rational(0));
    for (std::size_t k = 0; k <= top && k <= static_cast<std::size_t>(M); ++k)
        scaled[k] = cls.coeff(k) * rat_pow(d, k);

    std::vector<Rational> binom(top + 1);
    for (std::size_t k = 0; k <= top; ++k) binom[k] = Rational(binomial(N + 1, static_cast<long>(k)));

    auto out = mul_mod(mul_mod(binom, scaled, top),
                       geometric_inverse_pow(d, static_cast<unsigned long>(M) + 1, top), top);
    HClass result(N, std::move(out));
    if (!result.is_integral()) throw consistency_error("preimage CSM class has non-integer entries");
    return result;
}

Integer eidv_euler(const EIDVSpec& e, ClassVariant variant) {
    HClass cls = eidv_csm(e, variant);
    return to_integer(cls.coeff(static_cast<std::size_t>(e.target_dim)));
}

} // namespace detchern
