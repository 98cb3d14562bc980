#include "detchern/strata.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "detchern/errors.hpp"

namespace detchern {

void RankLocusSpec::validate() const {
    if (n < 1) throw usage_error("matrix size must be positive");
    if (corank == 0) return;
    if (!corank_valid(kind, n, corank)) {
        std::ostringstream msg;
        msg << "corank " << corank << " is not valid for " << kind_name(kind) << " " << n << "x"
            << n << " matrices";
        throw usage_error(msg.str());
    }
}

std::vector<int> positive_coranks(MatrixKind kind, int n) {
    std::vector<int> out;
    for (int k = 1; k < n; ++k)
        if (corank_valid(kind, n, k) && locus_codim(kind, k) > 0) out.push_back(k);
    return out;
}

Integer euler_number(long m) {
    if (m < 0) throw usage_error("Euler number index must be non-negative");
    if (m % 2 == 1) return 0;
    static std::vector<Integer> table{1};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    const std::size_t want = static_cast<std::size_t>(m / 2);
    while (table.size() <= want) {
        const long mm = static_cast<long>(table.size());
        Integer acc = 0;
        for (long j = 0; j < mm; ++j) acc += binomial(2 * mm, 2 * j) * table[j];
        table.push_back(-acc);
    }
    return table[want];
}

namespace {
std::map<std::tuple<MatrixKind, int, int>, HClass> q_memo;
std::mutex q_mutex;
} // namespace

const HClass& q_class(MatrixKind kind, int n, int corank) {
    const auto key = std::make_tuple(kind, n, corank);
    {
        std::lock_guard<std::mutex> lock(q_mutex);
        auto it = q_memo.find(key);
        if (it != q_memo.end()) return it->second;
    }
    HClass value = q_formula_II(kind, n, corank);
    std::lock_guard<std::mutex> lock(q_mutex);
    return q_memo.emplace(key, std::move(value)).first->second;
}

void seed_q_class(MatrixKind kind, int n, int corank, HClass value) {
    require_proper_locus(kind, n, corank);
    if (value.ambient() != ambient_dim(kind, n))
        throw usage_error("seeded q-polynomial has the wrong ambient dimension");
    if (value.coeff(0) != 0) throw usage_error("seeded q-polynomial has a nonzero constant term");
    std::lock_guard<std::mutex> lock(q_mutex);
    q_memo.insert_or_assign(std::make_tuple(kind, n, corank), std::move(value));
}

std::vector<std::pair<std::tuple<MatrixKind, int, int>, HClass>> q_class_snapshot() {
    std::lock_guard<std::mutex> lock(q_mutex);
    return {q_memo.begin(), q_memo.end()};
}

std::vector<std::pair<int, Integer>> csm_open_combination(MatrixKind kind, int n, int corank) {
    require_proper_locus(kind, n, corank);
    std::vector<std::pair<int, Integer>> out;
    const int k = corank;
    if (kind == MatrixKind::Ordinary || kind == MatrixKind::Symmetric) {
        for (int r = k; r <= n - 1; ++r) {
            Integer c = binomial(r, k);
            if ((r - k) % 2) c = -c;
            out.emplace_back(r, c);
        }
    } else if (n % 2 == 0) {
        const int kk = k / 2, nn = n / 2;
        for (int rr = kk; rr <= nn - 1; ++rr)
            out.emplace_back(2 * rr, binomial(2 * rr, 2 * kk) * euler_number(2 * rr - 2 * kk));
    } else {
        const int kk = (k - 1) / 2, nn = (n - 1) / 2;
        for (int rr = kk; rr <= nn - 1; ++rr)
            out.emplace_back(2 * rr + 1,
                             binomial(2 * rr + 1, 2 * kk + 1) * euler_number(2 * rr - 2 * kk));
    }
    return out;
}

HClass csm_open(const RankLocusSpec& s) {
    s.validate();
    if (s.is_dense()) return csm_dense(s.kind, s.n);
    HClass acc(s.ambient());
    for (const auto& [r, c] : csm_open_combination(s.kind, s.n, s.corank))
        acc = acc + q_class(s.kind, s.n, r).scaled(Rational(c));
    return acc;
}

HClass csm_dense(MatrixKind kind, int n) {
    const long N = ambient_dim(kind, n);
    HClass acc = HClass::binomial_class(N);
    for (int k : positive_coranks(kind, n)) acc = acc - csm_open({kind, n, k});
    return acc;
}

HClass csm_closure(const RankLocusSpec& s) {
    s.validate();
    if (s.is_dense()) return HClass::binomial_class(s.ambient());
    HClass acc(s.ambient());
    for (int r : positive_coranks(s.kind, s.n))
        if (r >= s.corank) acc = acc + csm_open({s.kind, s.n, r});
    return acc;
}

HClass chern_mather(const RankLocusSpec& s) {
    s.validate();
    if (s.is_dense()) return HClass::binomial_class(s.ambient());
    const MatrixKind kind = s.kind;
    const int n = s.n, k = s.corank;
    if (kind == MatrixKind::Ordinary) return q_class(kind, n, k);

    HClass acc(s.ambient());
    if (kind == MatrixKind::Symmetric) {
        // base change between local Euler obstructions and the resolution
        // classes; branches on the parity of the corank
        if (k % 2 == 0) {
            const int kk = k / 2;
            for (int r = kk; r <= (n - 1) / 2; ++r)
                for (int i = 2 * r; i <= n - 1; ++i) {
                    Integer c = binomial(r, kk) * binomial(i, 2 * r);
                    if ((i - 2 * r) % 2) c = -c;
                    acc = acc + q_class(kind, n, i).scaled(Rational(c));
                }
            for (int r = kk; r <= (n - 2) / 2; ++r)
                for (int i = 2 * r + 1; i <= n - 1; ++i) {
                    Integer c = binomial(r, kk) * binomial(i, 2 * r + 1);
                    if ((i - 2 * r - 1) % 2) c = -c;
                    acc = acc + q_class(kind, n, i).scaled(Rational(c));
                }
        } else {
            const int kk = (k - 1) / 2;
            for (int r = kk; r <= (n - 2) / 2; ++r)
                for (int i = 2 * r + 1; i <= n - 1; ++i) {
                    Integer c = binomial(r, kk) * binomial(i, 2 * r + 1);
                    if ((i - 2 * r - 1) % 2) c = -c;
                    acc = acc + q_class(kind, n, i).scaled(Rational(c));
                }
        }
        return acc;
    }

    if (n % 2 == 0) {
        const int kk = k / 2, nn = n / 2;
        for (int r = kk; r <= nn - 1; ++r)
            for (int i = r; i <= nn - 1; ++i)
                acc = acc + q_class(kind, n, 2 * i).scaled(Rational(
                          binomial(r, kk) * binomial(2 * i, 2 * r) * euler_number(2 * i - 2 * r)));
    } else {
        const int kk = (k - 1) / 2, nn = (n - 1) / 2;
        for (int r = kk; r <= nn - 1; ++r)
            for (int i = r; i <= nn - 1; ++i)
                acc = acc + q_class(kind, n, 2 * i + 1)
                                .scaled(Rational(binomial(r, kk) * binomial(2 * i + 1, 2 * r + 1) *
                                                 euler_number(2 * i - 2 * r)));
    }
    return acc;
}

} // namespace detchern
