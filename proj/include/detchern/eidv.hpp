#pragma once

#include "detchern/sectional.hpp"

namespace detchern {

// Preimage of a rank locus under a generic homogeneous matrix-valued map
// P^target_dim -> matrix space, entries of degree map_degree. Transversality
// makes the CSM class of the preimage the pullback-compatible transform below.
struct EIDVSpec {
    RankLocusSpec locus;
    long map_degree = 1; // d >= 1
    long target_dim = 0; // 0 <= target_dim <= ambient dim of the matrix space

    void validate() const;
};

// CSM class of the preimage in P^{target_dim}:
//   (1+H)^{target_dim+1} * cls(dH) * (1+dH)^{-(M+1)}  mod H^{target_dim+1}
// where cls is the chosen CSM class in P^M. Integer coefficients asserted.
HClass eidv_csm(const EIDVSpec& e, ClassVariant variant);

// Euler characteristic of the preimage: top coefficient of eidv_csm
Integer eidv_euler(const EIDVSpec& e, ClassVariant variant);

} // namespace detchern
