#include "detchern/dpoly.hpp"

#include <stdexcept>

namespace detchern {

DPoly::DPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

DPoly::DPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

DPoly DPoly::variable() {
    return monomial(Rational(1), 1);
}

DPoly DPoly::monomial(const Rational& c, std::size_t k) {
    DPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = c;
    }
    return p;
}

void DPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> DPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

Rational DPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
}

DPoly DPoly::operator+(const DPoly& o) const {
    DPoly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out.c_[i] += o.c_[i];
    out.trim();
    return out;
}

DPoly DPoly::operator-(const DPoly& o) const {
    return *this + o.scaled(Rational(-1));
}

DPoly DPoly::operator*(const DPoly& o) const {
    DPoly out;
    if (c_.empty() || o.c_.empty()) return out;
    out.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) out.c_[i + j] += c_[i] * o.c_[j];
    }
    out.trim();
    return out;
}

DPoly DPoly::scaled(const Rational& s) const {
    DPoly out;
    if (s == 0) return out;
    out.c_ = c_;
    for (auto& c : out.c_) c *= s;
    return out;
}

Rational DPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

DPoly DPoly::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in (a + b x)
    DPoly arg(std::vector<Rational>{a, b}), acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * arg + DPoly(c_[i]);
    return acc;
}

DPoly reverse_poly(const DPoly& f, std::size_t n) {
    auto d = f.degree();
    if (d && *d > n) throw std::invalid_argument("reverse_poly: degree exceeds reversal order");
    std::vector<Rational> out(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) out[n - i] = f.coeff(i);
    return DPoly(std::move(out));
}

} // namespace detchern
