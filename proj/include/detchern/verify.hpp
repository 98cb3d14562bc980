#pragma once

#include <string>
#include <vector>

namespace detchern {

struct VerifyItem {
    std::string section;
    std::string name;
    bool passed = false;
    std::string detail; // populated on failure (got vs want) or with a short note
};

struct VerifyOptions {
    std::string only; // substring filter against "section name"; empty = run all
};

// Recomputes every reference table row and the derived identities
// (cross-method equality, strata sums, duality, symmetry, scalar relations,
// gED values) and compares exactly. Items run in a fixed order.
std::vector<VerifyItem> run_verify(const VerifyOptions& opts = {});

} // namespace detchern
