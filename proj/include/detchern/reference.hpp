#pragma once

#include <vector>

#include "detchern/cycles.hpp"
#include "detchern/sectional.hpp"

namespace detchern {
namespace reference {

// Reference values for the symmetric n=3,4 and skew n=6,7 families, stored as
// exact integer coefficient rows. The verify suite and acceptance tests
// reproduce these rows bit for bit.

struct QRow {
    MatrixKind kind;
    int n;
    int corank;
    std::vector<long> coeffs; // H^0..H^N
};

struct CsmRow {
    MatrixKind kind;
    int n;
    int corank;               // 0 = dense stratum
    ClassVariant variant;     // Open for strata, Closure for deepest rows
    std::vector<long> coeffs; // H^0..H^N
};

struct CycleRow {
    MatrixKind kind;
    int n;
    int corank;
    bool characteristic;      // true: Ch row, false: Con row
    std::vector<long> entries; // j = 1..N
};

struct GedValue {
    MatrixKind kind;
    int n;
    int corank;
    long value;
};

const std::vector<QRow>& q_rows();
const std::vector<CsmRow>& csm_rows();
const std::vector<CycleRow>& cycle_rows();
const std::vector<GedValue>& ged_values();

HClass as_hclass(MatrixKind kind, int n, const std::vector<long>& coeffs);
BiClass as_biclass(MatrixKind kind, int n, const std::vector<long>& entries);

} // namespace reference
} // namespace detchern
