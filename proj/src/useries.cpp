#include "detchern/useries.hpp"

#include "detchern/errors.hpp"

namespace detchern {

USeries::USeries(std::size_t trunc) : c_(trunc + 1) {}

USeries USeries::one(std::size_t trunc) {
    USeries s(trunc);
    s.c_[0] = DPoly(1);
    return s;
}

USeries USeries::operator+(const USeries& o) const {
    if (trunc() != o.trunc()) throw usage_error("series truncation orders differ");
    USeries out(trunc());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

USeries USeries::operator*(const USeries& o) const {
    if (trunc() != o.trunc()) throw usage_error("series truncation orders differ");
    USeries out(trunc());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    return out;
}

USeries USeries::scaled(const Rational& s) const {
    USeries out(trunc());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i].scaled(s);
    return out;
}

USeries USeries::times_linear(const DPoly& a, const DPoly& b) const {
    USeries out(trunc());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        DPoly v = c_[i] * a;
        if (i > 0) v = v + c_[i - 1] * b;
        out.c_[i] = std::move(v);
    }
    return out;
}

USeries USeries::inverse() const {
    auto d = c_[0].degree();
    if (!d || *d != 0) throw usage_error("series inverse requires a nonzero scalar constant term");
    Rational inv0 = Rational(1) / c_[0].coeff(0);
    USeries out(trunc());
    out.c_[0] = DPoly(inv0);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        DPoly acc;
        for (std::size_t j = 1; j <= k; ++j)
            if (!c_[j].is_zero()) acc = acc + c_[j] * out.c_[k - j];
        out.c_[k] = acc.scaled(-inv0);
    }
    return out;
}

} // namespace detchern
