#include "detchern/qpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "detchern/errors.hpp"

namespace detchern {

const char* kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::Ordinary: return "ordinary";
        case MatrixKind::Symmetric: return "symmetric";
        case MatrixKind::Skew: return "skew";
    }
    return "?";
}

long ambient_dim(MatrixKind kind, int n) {
    if (n < 1) throw usage_error("matrix size must be positive");
    switch (kind) {
        case MatrixKind::Ordinary: return static_cast<long>(n) * n - 1;
        case MatrixKind::Symmetric: return static_cast<long>(n) * (n + 1) / 2 - 1;
        case MatrixKind::Skew: return static_cast<long>(n) * (n - 1) / 2 - 1;
    }
    return 0;
}

long locus_codim(MatrixKind kind, int k) {
    switch (kind) {
        case MatrixKind::Ordinary: return static_cast<long>(k) * k;
        case MatrixKind::Symmetric: return static_cast<long>(k) * (k + 1) / 2;
        case MatrixKind::Skew: return static_cast<long>(k) * (k - 1) / 2;
    }
    return 0;
}

bool corank_valid(MatrixKind kind, int n, int k) {
    if (k < 1 || k > n - 1) return false;
    if (kind == MatrixKind::Skew && (n - k) % 2 != 0) return false;
    return true;
}

void require_proper_locus(MatrixKind kind, int n, int k) {
    if (!corank_valid(kind, n, k)) {
        std::ostringstream msg;
        msg << "corank " << k << " is not valid for " << kind_name(kind) << " " << n << "x" << n
            << " matrices";
        throw usage_error(msg.str());
    }
    if (locus_codim(kind, k) == 0) {
        std::ostringstream msg;
        msg << kind_name(kind) << " corank " << k
            << " has codimension 0 (the locus is the whole space)";
        throw usage_error(msg.str());
    }
}

long rank_e(MatrixKind kind, int n, int r) {
    switch (kind) {
        case MatrixKind::Ordinary: return static_cast<long>(n) * (n - r);
        case MatrixKind::Symmetric: return static_cast<long>(n - r + 1) * (n - r) / 2;
        case MatrixKind::Skew: return static_cast<long>(n - r) * (n - r - 1) / 2;
    }
    return 0;
}

namespace {

// bundle of equations cutting out the resolution: the matrix pairs with the
// kernel, leaving a form on the quotient
BundleSymbol equations_bundle(MatrixKind kind, int n) {
    auto qd = BundleSymbol::dual(BundleSymbol::quot());
    switch (kind) {
        case MatrixKind::Ordinary: return BundleSymbol::direct_sum_power(qd, n);
        case MatrixKind::Symmetric: return BundleSymbol::sym2(qd);
        case MatrixKind::Skew: return BundleSymbol::wedge2(qd);
    }
    return qd;
}

// the complementary factors carry the affine variable d with no unit shift
std::vector<BundleSymbol> complement_bundles(MatrixKind kind, int n) {
    auto sd = BundleSymbol::dual(BundleSymbol::sub());
    auto qd = BundleSymbol::dual(BundleSymbol::quot());
    switch (kind) {
        case MatrixKind::Ordinary: return {BundleSymbol::direct_sum_power(sd, n)};
        case MatrixKind::Symmetric:
            return {BundleSymbol::sym2(sd), BundleSymbol::tensor(sd, qd)};
        case MatrixKind::Skew:
            return {BundleSymbol::wedge2(sd), BundleSymbol::tensor(sd, qd)};
    }
    return {};
}

BundleSymbol tangent_bundle() {
    return BundleSymbol::tensor(BundleSymbol::dual(BundleSymbol::sub()), BundleSymbol::quot());
}

} // namespace

HClass q_formula_II(MatrixKind kind, int n, int corank) {
    return q_formula_II(kind, n, corank, WeightVector::standard(n));
}

HClass q_formula_II(MatrixKind kind, int n, int corank, const WeightVector& w) {
    require_proper_locus(kind, n, corank);
    const int r = corank;
    const long N = ambient_dim(kind, n);
    const std::size_t T = static_cast<std::size_t>(r) * (n - r);
    const DPoly d = DPoly::variable();
    const DPoly d1 = d + DPoly(1);

    auto tangent = tangent_bundle();
    auto equations = equations_bundle(kind, n);
    auto complements = complement_bundles(kind, n);

    // one linear factor at a time keeps the coefficient degrees from
    // multiplying against each other
    auto integrand = [&](const FixedPoint& fp, const WeightVector& wv) {
        USeries s = USeries::one(T);
        for (const auto& rho : tangent.roots_at(fp, wv)) s = s.times_linear(DPoly(1), DPoly(rho));
        for (const auto& rho : equations.roots_at(fp, wv)) s = s.times_linear(d1, DPoly(rho));
        for (const auto& b : complements)
            for (const auto& rho : b.roots_at(fp, wv)) s = s.times_linear(d, DPoly(rho));
        return s;
    };

    DPoly q = integrate(n, r, integrand, w);
    q = q - DPoly::monomial(Rational(binomial(n, r)), static_cast<std::size_t>(N) + 1);

    auto deg = q.degree();
    if (deg && *deg > static_cast<std::size_t>(N))
        throw consistency_error("q degree exceeds the ambient dimension");
    if (q.coeff(0) != 0) throw consistency_error("q has a nonzero constant term");
    return HClass::from_poly(q, N);
}

namespace {

// restriction data of the Schubert-integral factors at one fixed point,
// shared by every (i, m) pair of the same locus
struct PointData {
    std::vector<Rational> tangent_chern; // u^0..u^T of c(Hom(S,Q))
    std::vector<Rational> esym;          // e_0..e_T of the E roots
    std::vector<Rational> segre;         // u^0..u^T of s(E)
};

std::map<std::tuple<MatrixKind, int, int>, std::vector<PointData>> point_cache;
std::map<std::tuple<MatrixKind, int, int, long, long>, Rational> schubert_cache;
std::mutex schubert_mutex;

const std::vector<PointData>& locus_point_data(MatrixKind kind, int n, int r) {
    const auto key = std::make_tuple(kind, n, r);
    std::lock_guard<std::mutex> lock(schubert_mutex);
    auto it = point_cache.find(key);
    if (it != point_cache.end()) return it->second;

    const std::size_t T = static_cast<std::size_t>(r) * (n - r);
    auto tangent = tangent_bundle();
    auto equations = equations_bundle(kind, n);
    const WeightVector w = WeightVector::standard(n);

    std::vector<PointData> data;
    for (const FixedPoint& fp : fixed_points(n, r)) {
        PointData pd;
        auto eroots = equations.roots_at(fp, w);
        USeries tang = total_chern(tangent.roots_at(fp, w), T);
        USeries seg = segre_series(eroots, T);
        for (std::size_t c = 0; c <= T; ++c) {
            pd.tangent_chern.push_back(tang.coeff(c).coeff(0));
            pd.esym.push_back(elementary_symmetric(eroots, static_cast<long>(c)));
            pd.segre.push_back(seg.coeff(c).coeff(0));
        }
        data.push_back(std::move(pd));
    }
    return point_cache.emplace(key, std::move(data)).first->second;
}

} // namespace

Rational schubert_integral(MatrixKind kind, int n, int r, long i, long m) {
    const long T = static_cast<long>(r) * (n - r);
    if (m < 0 || i < 0 || i + m > T) return 0;

    const auto key = std::make_tuple(kind, n, r, i, m);
    {
        std::lock_guard<std::mutex> lock(schubert_mutex);
        auto it = schubert_cache.find(key);
        if (it != schubert_cache.end()) return it->second;
    }

    const std::vector<PointData>& data = locus_point_data(kind, n, r);
    const std::size_t Tz = static_cast<std::size_t>(T);
    const std::size_t iz = static_cast<std::size_t>(i);
    const std::size_t mz = static_cast<std::size_t>(m);
    std::size_t next = 0;

    auto integrand = [&](const FixedPoint&, const WeightVector&) {
        const PointData& pd = data[next++];
        Rational scale = pd.esym[iz] * pd.segre[mz];
        USeries out(Tz);
        if (scale != 0)
            for (std::size_t c = 0; c + iz + mz <= Tz; ++c) {
                Rational v = pd.tangent_chern[c] * scale;
                if (v != 0) out.set_coeff(c + iz + mz, DPoly(v));
            }
        return out;
    };

    DPoly v = integrate(n, r, integrand);
    Rational val = v.coeff(0);
    std::lock_guard<std::mutex> lock(schubert_mutex);
    schubert_cache.emplace(key, val);
    return val;
}

HClass q_formula_I(MatrixKind kind, int n, int corank) {
    require_proper_locus(kind, n, corank);
    const int r = corank;
    const long N = ambient_dim(kind, n);
    const long e = rank_e(kind, n, r);

    std::vector<Rational> out(static_cast<std::size_t>(N) + 1, Rational(0));
    for (long l = 0; l <= N; ++l) {
        Rational g(0);
        for (long p = 0; p <= e; ++p)
            for (long i = 0; i <= p; ++i) {
                Integer b = binomial(e - i, p - i);
                if (b == 0) continue;
                long m = N - l + p - i + 1 - e;
                g += Rational(b) * schubert_integral(kind, n, r, i, m);
            }
        out[static_cast<std::size_t>(l)] = g;
    }

    if (out[0] != 0) throw consistency_error("q has a nonzero constant term");
    return HClass(N, std::move(out));
}

} // namespace detchern
