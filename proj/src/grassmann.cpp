#include "detchern/grassmann.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "detchern/errors.hpp"

namespace detchern {

std::vector<FixedPoint> fixed_points(int n, int r) {
    if (n < 0 || r < 0 || r > n) throw usage_error("fixed_points: need 0 <= r <= n");
    std::vector<FixedPoint> out;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i + 1;
    while (true) {
        out.push_back({n, r, idx});
        int pos = r - 1;
        while (pos >= 0 && idx[pos] == n - (r - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int k = pos + 1; k < r; ++k) idx[k] = idx[k - 1] + 1;
    }
    return out;
}

WeightVector WeightVector::standard(int n) {
    WeightVector w;
    for (int i = 1; i <= n; ++i) w.t.emplace_back(i);
    return w;
}

WeightVector WeightVector::seeded(int n, unsigned long long seed) {
    std::mt19937_64 gen(seed);
    // modest magnitudes keep the exact intermediate arithmetic small while
    // still exercising weight independence
    std::uniform_int_distribution<long> dist(-997, 997);
    std::set<long> used;
    WeightVector w;
    while (static_cast<int>(w.t.size()) < n) {
        long v = dist(gen);
        if (used.insert(v).second) w.t.emplace_back(v);
    }
    return w;
}

bool WeightVector::distinct() const {
    std::set<Rational> s(t.begin(), t.end());
    return s.size() == t.size();
}

BundleSymbol BundleSymbol::sub() {
    return {};
}

BundleSymbol BundleSymbol::quot() {
    BundleSymbol s;
    s.tag_ = Tag::Quot;
    return s;
}

BundleSymbol BundleSymbol::dual(BundleSymbol b) {
    BundleSymbol s;
    s.tag_ = Tag::Dual;
    s.a_ = std::make_shared<BundleSymbol>(std::move(b));
    return s;
}

BundleSymbol BundleSymbol::direct_sum_power(BundleSymbol b, int m) {
    if (m < 0) throw usage_error("direct_sum_power: multiplicity must be non-negative");
    BundleSymbol s;
    s.tag_ = Tag::Power;
    s.mult_ = m;
    s.a_ = std::make_shared<BundleSymbol>(std::move(b));
    return s;
}

BundleSymbol BundleSymbol::tensor(BundleSymbol a, BundleSymbol b) {
    BundleSymbol s;
    s.tag_ = Tag::Tensor;
    s.a_ = std::make_shared<BundleSymbol>(std::move(a));
    s.b_ = std::make_shared<BundleSymbol>(std::move(b));
    return s;
}

BundleSymbol BundleSymbol::sym2(BundleSymbol b) {
    BundleSymbol s;
    s.tag_ = Tag::Sym2;
    s.a_ = std::make_shared<BundleSymbol>(std::move(b));
    return s;
}

BundleSymbol BundleSymbol::wedge2(BundleSymbol b) {
    BundleSymbol s;
    s.tag_ = Tag::Wedge2;
    s.a_ = std::make_shared<BundleSymbol>(std::move(b));
    return s;
}

long BundleSymbol::rank(int r, int n) const {
    switch (tag_) {
        case Tag::Sub: return r;
        case Tag::Quot: return n - r;
        case Tag::Dual: return a_->rank(r, n);
        case Tag::Power: return mult_ * a_->rank(r, n);
        case Tag::Tensor: return a_->rank(r, n) * b_->rank(r, n);
        case Tag::Sym2: {
            long k = a_->rank(r, n);
            return k * (k + 1) / 2;
        }
        case Tag::Wedge2: {
            long k = a_->rank(r, n);
            return k * (k - 1) / 2;
        }
    }
    return 0;
}

std::vector<Rational> BundleSymbol::roots_at(const FixedPoint& fp, const WeightVector& w) const {
    switch (tag_) {
        case Tag::Sub: {
            std::vector<Rational> out;
            for (int i : fp.subset) out.push_back(w.t[i - 1]);
            return out;
        }
        case Tag::Quot: {
            std::vector<Rational> out;
            std::set<int> in(fp.subset.begin(), fp.subset.end());
            for (int j = 1; j <= fp.n; ++j)
                if (!in.count(j)) out.push_back(w.t[j - 1]);
            return out;
        }
        case Tag::Dual: {
            auto out = a_->roots_at(fp, w);
            for (auto& x : out) x = -x;
            return out;
        }
        case Tag::Power: {
            auto base = a_->roots_at(fp, w);
            std::vector<Rational> out;
            for (int c = 0; c < mult_; ++c) out.insert(out.end(), base.begin(), base.end());
            return out;
        }
        case Tag::Tensor: {
            auto ra = a_->roots_at(fp, w), rb = b_->roots_at(fp, w);
            std::vector<Rational> out;
            for (const auto& x : ra)
                for (const auto& y : rb) out.push_back(x + y);
            return out;
        }
        case Tag::Sym2: {
            auto rs = a_->roots_at(fp, w);
            std::vector<Rational> out;
            for (std::size_t a = 0; a < rs.size(); ++a)
                for (std::size_t b = a; b < rs.size(); ++b) out.push_back(rs[a] + rs[b]);
            return out;
        }
        case Tag::Wedge2: {
            auto rs = a_->roots_at(fp, w);
            std::vector<Rational> out;
            for (std::size_t a = 0; a < rs.size(); ++a)
                for (std::size_t b = a + 1; b < rs.size(); ++b) out.push_back(rs[a] + rs[b]);
            return out;
        }
    }
    return {};
}

USeries total_chern(const std::vector<Rational>& roots, std::size_t trunc) {
    USeries s = USeries::one(trunc);
    for (const auto& rho : roots) s = s.times_linear(DPoly(1), DPoly(rho));
    return s;
}

USeries affine_chern(const std::vector<Rational>& roots, const DPoly& shift, std::size_t trunc) {
    USeries s = USeries::one(trunc);
    for (const auto& rho : roots) s = s.times_linear(shift, DPoly(rho));
    return s;
}

USeries segre_series(const std::vector<Rational>& roots, std::size_t trunc) {
    return total_chern(roots, trunc).inverse();
}

Rational elementary_symmetric(const std::vector<Rational>& roots, long i) {
    if (i < 0 || i > static_cast<long>(roots.size())) return 0;
    std::vector<Rational> e(static_cast<std::size_t>(i) + 1, Rational(0));
    e[0] = 1;
    for (const auto& rho : roots)
        for (std::size_t k = std::min<std::size_t>(i, e.size() - 1); k > 0; --k)
            e[k] += rho * e[k - 1];
    return e[static_cast<std::size_t>(i)];
}

Rational euler_denominator(const FixedPoint& fp, const WeightVector& w) {
    std::set<int> in(fp.subset.begin(), fp.subset.end());
    Rational d(1);
    for (int i : fp.subset)
        for (int j = 1; j <= fp.n; ++j)
            if (!in.count(j)) d *= (w.t[j - 1] - w.t[i - 1]);
    return d;
}

DPoly integrate(int n, int r,
                const std::function<USeries(const FixedPoint&, const WeightVector&)>& integrand,
                const WeightVector& w, const IntegrateOptions& opts) {
    if (n < 0 || r < 0 || r > n) throw usage_error("integrate: need 0 <= r <= n");
    if (n > 12 && !opts.allow_large)
        throw usage_error("integrate: n > 12 enumerates too many fixed points (set allow_large)");
    if (static_cast<int>(w.t.size()) != n) throw usage_error("integrate: weight vector size != n");
    if (!w.distinct()) throw usage_error("integrate: weights must be pairwise distinct");

    std::size_t T = static_cast<std::size_t>(r) * (n - r);
    USeries total(T);
    for (const auto& fp : fixed_points(n, r)) {
        Rational den = euler_denominator(fp, w);
        total = total + integrand(fp, w).scaled(Rational(1) / den);
    }
    for (std::size_t k = 0; k < T; ++k) {
        if (!total.coeff(k).is_zero()) {
            std::ostringstream msg;
            msg << "integrate: u^" << k << " coefficient does not vanish";
            throw consistency_error(msg.str());
        }
    }
    return total.coeff(T);
}

DPoly integrate(int n, int r,
                const std::function<USeries(const FixedPoint&, const WeightVector&)>& integrand) {
    return integrate(n, r, integrand, WeightVector::standard(n));
}

} // namespace detchern
