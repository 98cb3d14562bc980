#pragma once

#include "detchern/strata.hpp"

namespace detchern {

enum class ClassVariant { Open, Closure, Dense };

// The involution J(f) = (t f(-1-t) + f(0)) / (1+t). The division is exact for
// every polynomial f; exactness is asserted. J is a linear involution.
DPoly involution_J(const DPoly& f);

// gamma polynomial: coefficient reversal of a class, gamma_j = coeff of H^{N-j}
DPoly gamma_of(const HClass& cls);

// chi polynomial of a stratum: J applied to the gamma polynomial of its CSM
// class. Coefficient s decodes as chi of a generic codimension-s linear
// section via chi_s = (-1)^s [t^s].
DPoly chi_poly(const RankLocusSpec& s, ClassVariant variant);

// gamma polynomial of the corank-r resolution pushforward: reversal of q
DPoly gamma_polynomial(MatrixKind kind, int n, int corank);

// same chi polynomial assembled from J(gamma_polynomial) of each resolution,
// using the stratum combination coefficients; cross-check route for chi_poly
DPoly chi_via_combination(const RankLocusSpec& s, ClassVariant variant);

// chi of generic linear sections decoded from a chi polynomial; entry s is
// chi(X cap L_1 cap .. cap L_s)
std::vector<Integer> sectional_euler(const DPoly& chi);

HClass csm_of(const RankLocusSpec& s, ClassVariant variant);

} // namespace detchern
