#include "detchern/render.hpp"

#include <sstream>

#include "detchern/errors.hpp"

namespace detchern {

OutputFormat parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "latex") return OutputFormat::Latex;
    throw usage_error("unknown format '" + name + "' (plain, json, csv, latex)");
}

namespace {

std::string term(const Rational& c, const std::string& var, std::size_t k, bool latex) {
    std::ostringstream os;
    Rational a = c < 0 ? Rational(-c) : c;
    if (k == 0) {
        os << to_decimal(a);
        return os.str();
    }
    if (a != 1) os << to_decimal(a);
    os << var;
    if (k > 1) os << (latex ? "^{" : "^") << k << (latex ? "}" : "");
    return os.str();
}

std::string poly_desc(const std::vector<Rational>& c, const std::string& var, bool latex) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (first) {
            if (c[i] < 0) os << "-";
            first = false;
        } else {
            os << (c[i] < 0 ? " - " : " + ");
        }
        os << term(c[i], var, i, latex);
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string poly_plain(const HClass& cls) {
    return poly_desc(cls.coeffs(), "H", false);
}

std::string poly_plain(const DPoly& f, const std::string& var) {
    return poly_desc(f.coeffs(), var, false);
}

std::string poly_latex(const HClass& cls) {
    return poly_desc(cls.coeffs(), "H", true);
}

std::string poly_latex(const DPoly& f, const std::string& var) {
    return poly_desc(f.coeffs(), var, true);
}

std::vector<std::string> coeff_strings(const HClass& cls) {
    std::vector<std::string> out;
    for (const auto& c : cls.coeffs()) out.push_back(to_decimal(c));
    return out;
}

std::vector<std::string> coeff_strings(const DPoly& f) {
    std::vector<std::string> out;
    for (const auto& c : f.coeffs()) out.push_back(to_decimal(c));
    return out;
}

std::vector<std::string> entry_strings(const BiClass& b) {
    std::vector<std::string> out;
    for (const auto& c : b.c) out.push_back(to_decimal(c));
    return out;
}

std::string csv_row(const std::string& label, const std::vector<std::string>& cells) {
    std::ostringstream os;
    os << label;
    for (const auto& c : cells) os << "," << c;
    return os.str();
}

std::string biclass_plain(const BiClass& b) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        if (i) os << ", ";
        os << to_decimal(b.c[i]);
    }
    os << ")";
    return os.str();
}

std::string biclass_latex(const BiClass& b) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        if (b.c[i] == 0) continue;
        Rational a = b.c[i] < 0 ? Rational(-b.c[i]) : b.c[i];
        if (first) {
            if (b.c[i] < 0) os << "-";
            first = false;
        } else {
            os << (b.c[i] < 0 ? " - " : " + ");
        }
        const long j = static_cast<long>(i) + 1;
        if (a != 1) os << to_decimal(a);
        os << "h_1^{" << b.n_ambient + 1 - j << "}h_2^{" << j << "}";
    }
    if (first) os << "0";
    return os.str();
}

} // namespace detchern
