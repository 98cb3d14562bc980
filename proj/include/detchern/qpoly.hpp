#pragma once

#include "detchern/grassmann.hpp"
#include "detchern/hclass.hpp"

namespace detchern {

enum class MatrixKind { Ordinary, Symmetric, Skew };

const char* kind_name(MatrixKind k);

// dimension of the projectivized matrix space P^N: n^2-1, C(n+1,2)-1, C(n,2)-1
long ambient_dim(MatrixKind kind, int n);
// codimension of the corank-k locus: k^2, C(k+1,2), C(k,2)
long locus_codim(MatrixKind kind, int k);
// 1 <= k <= n-1, and for skew matrices corank == n (mod 2)
bool corank_valid(MatrixKind kind, int n, int k);
// throws usage_error unless corank_valid and the locus is a proper
// subvariety (positive codimension; rules out skew corank 1 with odd n)
void require_proper_locus(MatrixKind kind, int n, int k);

// rank of the bundle E whose projectivization resolves the corank-r locus:
// n(n-r), C(n-r+1,2), C(n-r,2)
long rank_e(MatrixKind kind, int n, int r);

// Pushforward to P^N of the CSM class of the corank-r resolution, computed as
// a single localization integral of a product of Chern and affine factors
// minus d^{N+1} C(n,r). Coefficients of H^1..H^N; constant term is zero.
HClass q_formula_II(MatrixKind kind, int n, int corank);
HClass q_formula_II(MatrixKind kind, int n, int corank, const WeightVector& w);

// Same pushforward via the Schubert-integral expansion
//   gamma_l = sum_p sum_i C(e-i, p-i) * I(i, N-l+p-i+1-e)
// where I(i,m) integrates c(Hom(S,Q)) c_i(E) s_m(E) over G(corank, n).
HClass q_formula_I(MatrixKind kind, int n, int corank);

// I(i,m) above; memoized; zero when m < 0 or i+m exceeds dim G(corank,n)
Rational schubert_integral(MatrixKind kind, int n, int r, long i, long m);

} // namespace detchern
