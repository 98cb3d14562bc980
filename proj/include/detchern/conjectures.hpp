#pragma once

#include <string>
#include <vector>

#include "detchern/numeric.hpp"
#include "detchern/qpoly.hpp"

namespace detchern {

// one scanned coefficient sequence together with its observed properties
struct SequenceReport {
    std::string label;
    std::vector<Integer> values;
    bool nonnegative = false;      // every entry >= 0
    bool log_concave_abs = false;  // |a_i|^2 >= |a_{i-1}| * |a_{i+1}| on the support range
};

// scans q, csm, and cycle rows of every positive-codimension locus of the family;
// reports observations without asserting them
std::vector<SequenceReport> scan_conjectures(MatrixKind kind, int n);

} // namespace detchern
