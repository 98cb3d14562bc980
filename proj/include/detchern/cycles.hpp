#pragma once

#include "detchern/strata.hpp"

namespace detchern {

// Class in P^N x P^N supported in Lagrangian degrees: entry j (1-based)
// multiplies h1^{N+1-j} h2^j.
struct BiClass {
    long n_ambient = 0;
    std::vector<Rational> c; // size N, index j-1

    bool operator==(const BiClass& o) const = default;
};

// Transform of a degree-graded class into its cycle class in P^N x P^N:
//   c_j = sum_{l=j-1}^{N-1} (-1)^l beta_l C(l+1, j),  beta_l = coeff of H^{N-l}.
// For a locus of dimension d every entry carries the sign (-1)^d, so the
// unsigned entries are recovered as (-1)^d c_j.
BiClass cycle_transform(const HClass& cls);

// conormal cycle class: transform of the Chern-Mather class. pre: proper locus
BiClass conormal(const RankLocusSpec& s);
// characteristic cycle class: transform of the closure CSM class. pre: proper locus
BiClass characteristic(const RankLocusSpec& s);

// exchange the two hyperplane factors: entry j <-> entry N+1-j
BiClass flip(const BiClass& b);

// unsigned conormal multiplicities (-1)^dim c_j; the sign normalization is
// asserted (every entry non-negative integer)
std::vector<Integer> polar_degrees(const RankLocusSpec& s);

// sum of the polar degrees; cross-checked against the closed double-sum
// expression in the Mather coefficients, which must equal it
Integer generic_ed_degree(const RankLocusSpec& s);

// the closed double-sum expression over the Mather class coefficients
Integer ged_double_sum(const RankLocusSpec& s);

} // namespace detchern
