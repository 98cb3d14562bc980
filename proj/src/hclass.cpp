#include "detchern/hclass.hpp"

#include "detchern/errors.hpp"

namespace detchern {

HClass::HClass(long n_ambient) {
    if (n_ambient < 0) throw usage_error("ambient dimension must be non-negative");
    c_.assign(static_cast<std::size_t>(n_ambient) + 1, Rational(0));
}

HClass::HClass(long n_ambient, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (n_ambient < 0 || c_.size() != static_cast<std::size_t>(n_ambient) + 1)
        throw usage_error("class coefficient count must be N+1");
}

HClass HClass::from_poly(const DPoly& f, long n_ambient) {
    HClass out(n_ambient);
    auto d = f.degree();
    if (d && *d > static_cast<std::size_t>(n_ambient))
        throw usage_error("polynomial degree exceeds ambient dimension");
    for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = f.coeff(k);
    return out;
}

HClass HClass::binomial_class(long n_ambient) {
    HClass out(n_ambient);
    for (std::size_t k = 0; k < out.c_.size(); ++k)
        out.c_[k] = Rational(binomial(n_ambient + 1, static_cast<long>(k)));
    return out;
}

HClass HClass::operator+(const HClass& o) const {
    if (ambient() != o.ambient()) throw usage_error("ambient dimensions differ");
    HClass out(ambient());
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] + o.c_[k];
    return out;
}

HClass HClass::operator-(const HClass& o) const {
    return *this + o.scaled(Rational(-1));
}

HClass HClass::scaled(const Rational& s) const {
    HClass out(ambient());
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] * s;
    return out;
}

bool HClass::is_integral() const {
    for (const auto& c : c_)
        if (!is_integer(c)) return false;
    return true;
}

std::vector<Rational> mul_mod(const std::vector<Rational>& a, const std::vector<Rational>& b,
                              std::size_t top) {
    std::vector<Rational> out(top + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= top; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= top; ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Rational> geometric_inverse_pow(const Rational& s, unsigned long m, std::size_t top) {
    // (1+sH)^{-m} = sum_i (-1)^i C(m+i-1, i) s^i H^i
    std::vector<Rational> out(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
        Rational c(binomial(static_cast<long>(m + i) - 1, static_cast<long>(i)));
        if (i % 2) c = -c;
        out[i] = c * rat_pow(s, i);
    }
    return out;
}

} // namespace detchern
