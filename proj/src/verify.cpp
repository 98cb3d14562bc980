#include "detchern/verify.hpp"

#include <functional>
#include <sstream>

#include "detchern/reference.hpp"
#include "detchern/errors.hpp"
#include "detchern/render.hpp"
#include "detchern/sectional.hpp"

namespace detchern {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
    return os.str();
}

std::string family_section(MatrixKind kind, int n) {
    std::ostringstream os;
    os << (kind == MatrixKind::Ordinary ? "ordinary"
                                        : kind == MatrixKind::Symmetric ? "sym" : "skew")
       << "-n" << n;
    return os.str();
}

struct Runner {
    const VerifyOptions& opts;
    std::vector<VerifyItem> items;

    void add(const std::string& section, const std::string& name,
             const std::function<std::pair<bool, std::string>()>& fn) {
        if (!opts.only.empty() && (section + " " + name).find(opts.only) == std::string::npos)
            return;
        VerifyItem item{section, name, false, ""};
        try {
            auto [ok, detail] = fn();
            item.passed = ok;
            item.detail = detail;
        } catch (const std::exception& e) {
            item.passed = false;
            item.detail = std::string("exception: ") + e.what();
        }
        items.push_back(std::move(item));
    }
};

std::pair<bool, std::string> compare(const HClass& got, const HClass& want) {
    if (got == want) return {true, ""};
    return {false, "got " + poly_plain(got) + " | want " + poly_plain(want)};
}

std::pair<bool, std::string> compare(const BiClass& got, const BiClass& want) {
    if (got == want) return {true, ""};
    return {false, "got " + biclass_plain(got) + " | want " + biclass_plain(want)};
}

} // namespace

std::vector<VerifyItem> run_verify(const VerifyOptions& opts) {
    Runner r{opts, {}};

    for (const auto& row : reference::q_rows()) {
        std::ostringstream name;
        name << "q " << kind_name(row.kind) << " n=" << row.n << " corank=" << row.corank;
        r.add(family_section(row.kind, row.n), name.str(), [&row] {
            return compare(q_class(row.kind, row.n, row.corank),
                           reference::as_hclass(row.kind, row.n, row.coeffs));
        });
    }

    for (const auto& row : reference::csm_rows()) {
        std::ostringstream name;
        name << "csm "
             << (row.variant == ClassVariant::Dense
                     ? "dense"
                     : row.variant == ClassVariant::Open ? "open" : "closure")
             << " " << kind_name(row.kind) << " n=" << row.n << " corank=" << row.corank;
        r.add(family_section(row.kind, row.n), name.str(), [&row] {
            RankLocusSpec spec{row.kind, row.n, row.corank};
            return compare(csm_of(spec, row.variant),
                           reference::as_hclass(row.kind, row.n, row.coeffs));
        });
    }

    for (const auto& row : reference::cycle_rows()) {
        std::ostringstream name;
        name << (row.characteristic ? "Ch" : "Con") << " " << kind_name(row.kind)
             << " n=" << row.n << " corank=" << row.corank;
        r.add(family_section(row.kind, row.n), name.str(), [&row] {
            RankLocusSpec spec{row.kind, row.n, row.corank};
            BiClass got = row.characteristic ? characteristic(spec) : conormal(spec);
            return compare(got, reference::as_biclass(row.kind, row.n, row.entries));
        });
    }

    for (const auto& g : reference::ged_values()) {
        std::ostringstream name;
        name << "gED " << kind_name(g.kind) << " n=" << g.n << " corank=" << g.corank;
        r.add("ged", name.str(), [&g]() -> std::pair<bool, std::string> {
            Integer got = generic_ed_degree({g.kind, g.n, g.corank});
            if (got == g.value) return {true, ""};
            return {false, "got " + to_decimal(got) + " | want " + std::to_string(g.value)};
        });
    }

    // the two computation routes agree on every locus
    for (MatrixKind kind :
         {MatrixKind::Ordinary, MatrixKind::Symmetric, MatrixKind::Skew})
        for (int n = 2; n <= 7; ++n)
            for (int k : positive_coranks(kind, n)) {
                std::ostringstream name;
                name << kind_name(kind) << " n=" << n << " corank=" << k;
                r.add("cross-method", name.str(), [kind, n, k] {
                    return compare(q_formula_I(kind, n, k), q_class(kind, n, k));
                });
            }

    // CSM classes of the strata partition the ambient total Chern class
    for (MatrixKind kind :
         {MatrixKind::Ordinary, MatrixKind::Symmetric, MatrixKind::Skew})
        for (int n = 2; n <= 7; ++n) {
            if (kind == MatrixKind::Skew && n < 3) continue;
            std::ostringstream name;
            name << kind_name(kind) << " n=" << n;
            r.add("strata-sum", name.str(), [kind, n] {
                HClass total = csm_dense(kind, n);
                for (int k : positive_coranks(kind, n))
                    total = total + csm_open({kind, n, k});
                return compare(total, HClass::binomial_class(ambient_dim(kind, n)));
            });
        }

    // projective duality: polar degree sequences of dual pairs are mirrored
    const std::vector<std::pair<RankLocusSpec, RankLocusSpec>> dual_pairs{
        {{MatrixKind::Symmetric, 3, 1}, {MatrixKind::Symmetric, 3, 2}},
        {{MatrixKind::Symmetric, 4, 1}, {MatrixKind::Symmetric, 4, 3}},
        {{MatrixKind::Symmetric, 4, 2}, {MatrixKind::Symmetric, 4, 2}},
        {{MatrixKind::Skew, 6, 2}, {MatrixKind::Skew, 6, 4}},
        {{MatrixKind::Skew, 7, 3}, {MatrixKind::Skew, 7, 5}},
    };
    for (const auto& [a, b] : dual_pairs) {
        std::ostringstream name;
        name << kind_name(a.kind) << " (" << a.n << "," << a.corank << ")~(" << b.n << ","
             << b.corank << ")";
        r.add("duality", name.str(), [a = a, b = b]() -> std::pair<bool, std::string> {
            auto pa = polar_degrees(a);
            auto pb = polar_degrees(b);
            std::vector<Integer> rev(pb.rbegin(), pb.rend());
            if (pa == rev) return {true, ""};
            return {false, "polar sequences are not mirrored"};
        });
    }

    // characteristic cycle rows of hypersurface-type loci are palindromic
    for (const RankLocusSpec spec :
         {RankLocusSpec{MatrixKind::Symmetric, 3, 1}, RankLocusSpec{MatrixKind::Symmetric, 4, 1},
          RankLocusSpec{MatrixKind::Skew, 6, 2}, RankLocusSpec{MatrixKind::Skew, 7, 3}}) {
        std::ostringstream name;
        name << "Ch palindrome " << kind_name(spec.kind) << " (" << spec.n << "," << spec.corank
             << ")";
        r.add("symmetry", name.str(), [spec]() -> std::pair<bool, std::string> {
            BiClass ch = characteristic(spec);
            if (ch == flip(ch)) return {true, ""};
            return {false, "Ch row is not flip-invariant: " + biclass_plain(ch)};
        });
    }

    // scalar relations displayed alongside the reference tables
    struct Relation {
        MatrixKind kind;
        int n;
        long scale;
        std::vector<std::pair<int, long>> open_combo; // (corank, multiplier)
    };
    for (const Relation& rel : {Relation{MatrixKind::Symmetric, 3, 3, {{1, 1}, {2, 2}}},
                                Relation{MatrixKind::Symmetric, 4, 4, {{1, 1}, {2, 2}}},
                                Relation{MatrixKind::Skew, 6, 3, {{2, 1}}}}) {
        std::ostringstream name;
        name << rel.scale << "H * dense " << kind_name(rel.kind) << " n=" << rel.n;
        r.add("relations", name.str(), [rel]() -> std::pair<bool, std::string> {
            const long N = ambient_dim(rel.kind, rel.n);
            HClass dense = csm_dense(rel.kind, rel.n);
            HClass lhs(N);
            {
                std::vector<Rational> c(static_cast<std::size_t>(N) + 1, Rational(0));
                for (long i = 1; i <= N; ++i)
                    c[i] = dense.coeff(static_cast<std::size_t>(i - 1)) * rel.scale;
                lhs = HClass(N, std::move(c));
            }
            HClass rhs(N);
            for (const auto& [k, mult] : rel.open_combo)
                rhs = rhs + csm_open({rel.kind, rel.n, k}).scaled(Rational(mult));
            return compare(lhs, rhs);
        });
    }

    // chi polynomial routes agree and decode consistently
    for (MatrixKind kind : {MatrixKind::Ordinary, MatrixKind::Symmetric, MatrixKind::Skew})
        for (int n = 2; n <= 6; ++n) {
            if (kind == MatrixKind::Skew && n < 4) continue;
            std::ostringstream name;
            name << kind_name(kind) << " n=" << n;
            r.add("sectional", name.str(), [kind, n]() -> std::pair<bool, std::string> {
                for (int k : positive_coranks(kind, n))
                    for (ClassVariant v : {ClassVariant::Open, ClassVariant::Closure}) {
                        RankLocusSpec spec{kind, n, k};
                        DPoly a = chi_poly(spec, v);
                        DPoly b = chi_via_combination(spec, v);
                        if (!(a == b))
                            return {false, join({"route mismatch at corank",
                                                 std::to_string(k)})};
                    }
                return {true, ""};
            });
        }

    return r.items;
}

} // namespace detchern
