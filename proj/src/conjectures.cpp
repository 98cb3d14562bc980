#include "detchern/conjectures.hpp"

#include <sstream>

#include "detchern/cycles.hpp"
#include "detchern/strata.hpp"

namespace detchern {

namespace {

bool all_nonnegative(const std::vector<Integer>& v) {
    for (const Integer& x : v)
        if (x < 0) return false;
    return true;
}

bool log_concave_abs(const std::vector<Integer>& v) {
    std::vector<Integer> a;
    a.reserve(v.size());
    for (const Integer& x : v) a.push_back(abs(x));
    std::size_t first = 0, last = a.size();
    while (first < a.size() && a[first] == 0) ++first;
    while (last > first && a[last - 1] == 0) --last;
    for (std::size_t i = first + 1; i + 1 < last; ++i)
        if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
    return true;
}

std::vector<Integer> integer_coeffs(const HClass& c) {
    std::vector<Integer> out;
    out.reserve(c.coeffs().size());
    for (const Rational& x : c.coeffs()) out.push_back(to_integer(x));
    return out;
}

std::vector<Integer> integer_entries(const BiClass& b) {
    std::vector<Integer> out;
    out.reserve(b.c.size());
    for (const Rational& x : b.c) out.push_back(to_integer(x));
    return out;
}

SequenceReport make_report(std::string label, std::vector<Integer> values) {
    SequenceReport rep;
    rep.label = std::move(label);
    rep.values = std::move(values);
    rep.nonnegative = all_nonnegative(rep.values);
    rep.log_concave_abs = log_concave_abs(rep.values);
    return rep;
}

} // namespace

std::vector<SequenceReport> scan_conjectures(MatrixKind kind, int n) {
    std::vector<SequenceReport> out;
    for (int k : positive_coranks(kind, n)) {
        RankLocusSpec spec{kind, n, k};
        std::ostringstream tag;
        tag << kind_name(kind) << " n=" << n << " corank=" << k;

        out.push_back(make_report("q " + tag.str(), integer_coeffs(q_class(kind, n, k))));
        out.push_back(make_report("csm-open " + tag.str(), integer_coeffs(csm_open(spec))));
        out.push_back(make_report("Ch " + tag.str(), integer_entries(characteristic(spec))));
        out.push_back(make_report("Con " + tag.str(), integer_entries(conormal(spec))));
    }
    return out;
}

} // namespace detchern
