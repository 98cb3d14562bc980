#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "detchern/conjectures.hpp"
#include "detchern/cycles.hpp"
#include "detchern/eidv.hpp"
#include "detchern/errors.hpp"
#include "detchern/render.hpp"
#include "detchern/rescache.hpp"
#include "detchern/sectional.hpp"
#include "detchern/verify.hpp"

using namespace detchern;
using ordered_json = nlohmann::ordered_json;

namespace {

MatrixKind parse_kind(const std::string& s) {
    if (s == "ordinary") return MatrixKind::Ordinary;
    if (s == "symmetric") return MatrixKind::Symmetric;
    if (s == "skew") return MatrixKind::Skew;
    throw usage_error("unknown kind: " + s);
}

ClassVariant parse_variant(const std::string& s) {
    if (s == "open") return ClassVariant::Open;
    if (s == "closure") return ClassVariant::Closure;
    if (s == "dense") return ClassVariant::Dense;
    throw usage_error("unknown class variant: " + s);
}

const char* variant_name(ClassVariant v) {
    switch (v) {
        case ClassVariant::Open: return "open";
        case ClassVariant::Closure: return "closure";
        case ClassVariant::Dense: return "dense";
    }
    return "?";
}

std::string integer_tuple(const std::vector<Integer>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_decimal(v[i]);
    }
    return out + ")";
}

std::vector<std::string> integer_strings(const std::vector<Integer>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Integer& x : v) out.push_back(to_decimal(x));
    return out;
}

ordered_json locus_json(MatrixKind kind, int n, int corank) {
    ordered_json j;
    j["kind"] = kind_name(kind);
    j["n"] = n;
    j["corank"] = corank;
    j["ambient_dim"] = ambient_dim(kind, n);
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(1) << "\n"; }

void print_class(const char* command, MatrixKind kind, int n, int corank, const HClass& cls,
                 OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Plain: std::cout << poly_plain(cls) << "\n"; break;
        case OutputFormat::Latex: std::cout << poly_latex(cls) << "\n"; break;
        case OutputFormat::Csv: std::cout << csv_row(command, coeff_strings(cls)) << "\n"; break;
        case OutputFormat::Json: {
            ordered_json j = locus_json(kind, n, corank);
            j["coefficients"] = coeff_strings(cls);
            emit(j);
            break;
        }
    }
}

// Opens the persistent q-polynomial cache (if configured), seeds the in-memory
// table from well-formed entries, and writes back anything newly computed.
class CacheSession {
public:
    void open(std::string cli_path) {
        path_ = std::move(cli_path);
        if (path_.empty())
            if (const char* env = std::getenv("DETCHERN_CACHE")) path_ = env;
        if (path_.empty()) return;
        cache_ = ResultCache::load(path_);
        for (MatrixKind kind :
             {MatrixKind::Ordinary, MatrixKind::Symmetric, MatrixKind::Skew})
            for (int n = 2; n <= 12; ++n)
                for (int k : positive_coranks(kind, n))
                    if (auto hit = cache_->lookup(kind, n, k, "formula2")) {
                        try {
                            seed_q_class(kind, n, k, *hit);
                        } catch (const usage_error& e) {
                            std::cerr << "cache: ignoring entry " << kind_name(kind) << " n=" << n
                                      << " corank=" << k << ": " << e.what() << "\n";
                        }
                    }
    }

    void close() {
        if (!cache_) return;
        for (const auto& [key, value] : q_class_snapshot()) {
            const auto& [kind, n, k] = key;
            cache_->store(kind, n, k, "formula2", value);
        }
        if (cache_->dirty()) cache_->save(path_);
    }

private:
    std::string path_;
    std::optional<ResultCache> cache_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic classes of generic determinantal rank loci"};
    app.require_subcommand(1);

    std::string format_s = "plain";
    std::string cache_path;
    app.add_option("--format", format_s, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv", "latex"}));
    app.add_option("--cache-path", cache_path,
                   "persistent result cache file (default: $DETCHERN_CACHE)");

    std::string kind_s;
    int n = 0;
    int corank = 0;
    auto add_locus = [&](CLI::App* sub, bool with_corank = true) {
        sub->fallthrough();
        sub->add_option("--kind", kind_s, "ordinary|symmetric|skew")
            ->required()
            ->check(CLI::IsMember({"ordinary", "symmetric", "skew"}));
        sub->add_option("--n", n, "matrix size")->required();
        if (with_corank) sub->add_option("--corank", corank, "corank of the locus")->required();
    };

    auto* q_cmd = app.add_subcommand("q", "pushforward class of the corank resolution");
    add_locus(q_cmd);
    std::string method = "formula2";
    q_cmd->add_option("--method", method, "formula1|formula2|both")
        ->check(CLI::IsMember({"formula1", "formula2", "both"}));
    unsigned long long weights_seed = 0;
    auto* seed_opt = q_cmd->add_option(
        "--weights-seed", weights_seed,
        "compute with seeded random localization weights instead of the defaults");

    auto* csm_cmd = app.add_subcommand("csm", "CSM class of a rank stratum");
    add_locus(csm_cmd);
    csm_cmd->get_option("--corank")->required(false);
    std::string which_csm;
    csm_cmd->add_option("--which", which_csm, "open|closure|dense (default: open; dense when corank is 0)")
        ->check(CLI::IsMember({"open", "closure", "dense"}));

    auto* mather_cmd = app.add_subcommand("mather", "Chern-Mather class of a locus closure");
    add_locus(mather_cmd);

    auto* chi_cmd = app.add_subcommand("chi", "sectional Euler characteristic polynomial");
    add_locus(chi_cmd);
    std::string which_chi = "closure";
    chi_cmd->add_option("--which", which_chi, "open|closure|dense")
        ->check(CLI::IsMember({"open", "closure", "dense"}));

    auto* cycles_cmd =
        app.add_subcommand("cycles", "characteristic and conormal cycle classes");
    add_locus(cycles_cmd);

    auto* polar_cmd = app.add_subcommand("polar", "polar degrees of a locus closure");
    add_locus(polar_cmd);

    auto* ged_cmd = app.add_subcommand("ged", "generic Euclidean distance degree");
    add_locus(ged_cmd);

    auto* eidv_cmd = app.add_subcommand(
        "eidv", "CSM class and Euler characteristic of a generic determinantal preimage");
    add_locus(eidv_cmd);
    long map_degree = 1;
    long source_dim = 0;
    eidv_cmd->add_option("--map-degree", map_degree, "degree of the matrix entries");
    eidv_cmd->add_option("--ambient-dim", source_dim, "dimension of the source projective space")
        ->required();
    std::string which_eidv = "closure";
    eidv_cmd->add_option("--which", which_eidv, "open|closure|dense")
        ->check(CLI::IsMember({"open", "closure", "dense"}));

    auto* verify_cmd =
        app.add_subcommand("verify", "recompute and compare every stored reference value");
    verify_cmd->fallthrough();
    std::string only;
    verify_cmd->add_option("--only", only, "run only items whose section or name contains this");

    auto* conj_cmd =
        app.add_subcommand("conjectures", "scan coefficient sequences of a family");
    conj_cmd->fallthrough();
    conj_cmd->add_option("--kind", kind_s, "ordinary|symmetric|skew")
        ->required()
        ->check(CLI::IsMember({"ordinary", "symmetric", "skew"}));
    conj_cmd->add_option("--n", n, "matrix size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        OutputFormat fmt = parse_format(format_s);
        CacheSession session;
        session.open(cache_path);
        int rc = 0;

        if (q_cmd->parsed()) {
            MatrixKind kind = parse_kind(kind_s);
            require_proper_locus(kind, n, corank);
            HClass value = [&]() -> HClass {
                if (seed_opt->count()) {
                    WeightVector w = WeightVector::seeded(n, weights_seed);
                    return q_formula_II(kind, n, corank, w);
                }
                if (method == "formula1") return q_formula_I(kind, n, corank);
                if (method == "both") {
                    HClass a = q_formula_I(kind, n, corank);
                    if (!(a == q_class(kind, n, corank)))
                        throw consistency_error("the two pushforward formulas disagree");
                    return a;
                }
                return q_class(kind, n, corank);
            }();
            print_class("q", kind, n, corank, value, fmt);
        } else if (csm_cmd->parsed()) {
            MatrixKind kind = parse_kind(kind_s);
            ClassVariant v = which_csm.empty()
                                 ? (corank == 0 ? ClassVariant::Dense : ClassVariant::Open)
                                 : parse_variant(which_csm);
            RankLocusSpec spec{kind, n, corank};
            print_class("csm", kind, n, corank, csm_of(spec, v), fmt);
        } else if (mather_cmd->parsed()) {
            MatrixKind kind = parse_kind(kind_s);
            require_proper_locus(kind, n, corank);
            print_class("mather", kind, n, corank, chern_mather({kind, n, corank}), fmt);
        } else if (chi_cmd->parsed()) {
            MatrixKind kind = parse_kind(kind_s);
            RankLocusSpec spec{kind, n, corank};
            ClassVariant v = parse_variant(which_chi);
            DPoly chi = chi_poly(spec, v);
            std::vector<Integer> sections = sectional_euler(chi);
            switch (fmt) {
                case OutputFormat::Plain:
                    std::cout << "chi: " << poly_plain(chi, "t") << "\n"
                              << "sections: " << integer_tuple(sections) << "\n";
                    break;
                case OutputFormat::Latex:
                    std::cout << "chi: " << poly_latex(chi, "t") << "\n"
                              << "sections: " << integer_tuple(sections) << "\n";
                    break;
                case OutputFormat::Csv:
                    std::cout << csv_row("chi", coeff_strings(chi)) << "\n"
                              << csv_row("sections", integer_strings(sections)) << "\n";
                    break;
                case OutputFormat::Json: {
                    ordered_json j = locus_json(kind, n, corank);
                    j["variant"] = variant_name(v);
                    j["chi"] = coeff_strings(chi);
                    j["sections"] = integer_strings(sections);
                    emit(j);
                    break;
                }
            }
        } else if (cycles_cmd->parsed()) {
            MatrixKind kind = parse_kind(kind_s);
            RankLocusSpec spec{kind, n, corank};
            BiClass ch = characteristic(spec);
            BiClass con = conormal(spec);
            switch (fmt) {
                case OutputFormat::Plain:
                    std::cout << "Ch: " << biclass_plain(ch) << "\n"
                              << "Con: " << biclass_plain(con) << "\n";
                    break;
                case OutputFormat::Latex:
                    std::cout << "Ch: " << biclass_latex(ch) << "\n"
                              << "Con: " << biclass_latex(con) << "\n";
                    break;
                case OutputFormat::Csv:
                    std::cout << csv_row("Ch", entry_strings(ch)) << "\n"
                              << csv_row("Con", entry_strings(con)) << "\n";
                    break;
                case OutputFormat::Json: {
                    ordered_json j = locus_json(kind, n, corank);
                    j["characteristic"] = entry_strings(ch);
                    j["conormal"] = entry_strings(con);
                    emit(j);
                    break;
                }
            }
        } else if (polar_cmd->parsed()) {
            MatrixKind kind = parse_kind(kind_s);
            std::vector<Integer> deg = polar_degrees({kind, n, corank});
            switch (fmt) {
                case OutputFormat::Plain:
                case OutputFormat::Latex: std::cout << integer_tuple(deg) << "\n"; break;
                case OutputFormat::Csv:
                    std::cout << csv_row("polar", integer_strings(deg)) << "\n";
                    break;
                case OutputFormat::Json: {
                    ordered_json j = locus_json(kind, n, corank);
                    j["polar_degrees"] = integer_strings(deg);
                    emit(j);
                    break;
                }
            }
        } else if (ged_cmd->parsed()) {
            MatrixKind kind = parse_kind(kind_s);
            Integer value = generic_ed_degree({kind, n, corank});
            switch (fmt) {
                case OutputFormat::Plain:
                case OutputFormat::Latex: std::cout << to_decimal(value) << "\n"; break;
                case OutputFormat::Csv:
                    std::cout << csv_row("ged", {to_decimal(value)}) << "\n";
                    break;
                case OutputFormat::Json: {
                    ordered_json j = locus_json(kind, n, corank);
                    j["ged"] = to_decimal(value);
                    emit(j);
                    break;
                }
            }
        } else if (eidv_cmd->parsed()) {
            MatrixKind kind = parse_kind(kind_s);
            ClassVariant v = parse_variant(which_eidv);
            EIDVSpec e{{kind, n, corank}, map_degree, source_dim};
            HClass cls = eidv_csm(e, v);
            Integer euler = eidv_euler(e, v);
            switch (fmt) {
                case OutputFormat::Plain:
                    std::cout << "csm: " << poly_plain(cls) << "\n"
                              << "euler: " << to_decimal(euler) << "\n";
                    break;
                case OutputFormat::Latex:
                    std::cout << "csm: " << poly_latex(cls) << "\n"
                              << "euler: " << to_decimal(euler) << "\n";
                    break;
                case OutputFormat::Csv:
                    std::cout << csv_row("csm", coeff_strings(cls)) << "\n"
                              << csv_row("euler", {to_decimal(euler)}) << "\n";
                    break;
                case OutputFormat::Json: {
                    ordered_json j = locus_json(kind, n, corank);
                    j["map_degree"] = map_degree;
                    j["source_dim"] = source_dim;
                    j["variant"] = variant_name(v);
                    j["coefficients"] = coeff_strings(cls);
                    j["euler"] = to_decimal(euler);
                    emit(j);
                    break;
                }
            }
        } else if (verify_cmd->parsed()) {
            std::vector<VerifyItem> items = run_verify(VerifyOptions{only});
            std::size_t passed = 0;
            for (const auto& it : items) passed += it.passed ? 1 : 0;
            switch (fmt) {
                case OutputFormat::Plain:
                case OutputFormat::Latex:
                    for (const auto& it : items) {
                        std::cout << (it.passed ? "PASS " : "FAIL ") << it.section << " "
                                  << it.name;
                        if (!it.passed && !it.detail.empty()) std::cout << " [" << it.detail << "]";
                        std::cout << "\n";
                    }
                    std::cout << passed << " of " << items.size() << " passed\n";
                    break;
                case OutputFormat::Csv:
                    for (const auto& it : items)
                        std::cout << csv_row(it.section,
                                             {it.name, it.passed ? "pass" : "fail", it.detail})
                                  << "\n";
                    break;
                case OutputFormat::Json: {
                    ordered_json j;
                    j["command"] = "verify";
                    j["items"] = ordered_json::array();
                    for (const auto& it : items) {
                        ordered_json e;
                        e["section"] = it.section;
                        e["name"] = it.name;
                        e["passed"] = it.passed;
                        if (!it.detail.empty()) e["detail"] = it.detail;
                        j["items"].push_back(std::move(e));
                    }
                    j["passed"] = passed;
                    j["total"] = items.size();
                    emit(j);
                    break;
                }
            }
            if (passed != items.size()) rc = 1;
        } else if (conj_cmd->parsed()) {
            MatrixKind kind = parse_kind(kind_s);
            std::vector<SequenceReport> reports = scan_conjectures(kind, n);
            switch (fmt) {
                case OutputFormat::Plain:
                case OutputFormat::Latex:
                    for (const auto& rep : reports)
                        std::cout << rep.label << ": nonnegative="
                                  << (rep.nonnegative ? "yes" : "no")
                                  << " log-concave=" << (rep.log_concave_abs ? "yes" : "no")
                                  << " values=" << integer_tuple(rep.values) << "\n";
                    break;
                case OutputFormat::Csv:
                    for (const auto& rep : reports) {
                        std::vector<std::string> cells{rep.nonnegative ? "yes" : "no",
                                                       rep.log_concave_abs ? "yes" : "no"};
                        for (const std::string& s : integer_strings(rep.values))
                            cells.push_back(s);
                        std::cout << csv_row(rep.label, cells) << "\n";
                    }
                    break;
                case OutputFormat::Json: {
                    ordered_json j;
                    j["command"] = "conjectures";
                    j["kind"] = kind_name(kind);
                    j["n"] = n;
                    j["reports"] = ordered_json::array();
                    for (const auto& rep : reports) {
                        ordered_json e;
                        e["label"] = rep.label;
                        e["nonnegative"] = rep.nonnegative;
                        e["log_concave_abs"] = rep.log_concave_abs;
                        e["values"] = integer_strings(rep.values);
                        j["reports"].push_back(std::move(e));
                    }
                    emit(j);
                    break;
                }
            }
        }

        session.close();
        return rc;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
