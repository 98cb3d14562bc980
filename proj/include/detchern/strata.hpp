#pragma once

#include <utility>
#include <vector>

#include "detchern/qpoly.hpp"

namespace detchern {

// A corank stratum of the projectivized matrix space. corank 0 denotes the
// dense (maximal rank) stratum.
struct RankLocusSpec {
    MatrixKind kind;
    int n;
    int corank;

    void validate() const; // throws usage_error
    long ambient() const { return ambient_dim(kind, n); }
    long codim() const { return locus_codim(kind, corank); }
    long dim() const { return ambient() - codim(); }
    // true when the closure is the whole ambient space (corank 0, or the
    // skew odd-size corank-1 locus of codimension 0)
    bool is_dense() const { return corank == 0 || codim() == 0; }
};

// coranks of all strata with positive codimension, ascending
std::vector<int> positive_coranks(MatrixKind kind, int n);

// Euler numbers: coefficients of m!/cosh-expansion; E_0 = 1, odd vanish,
// sum_j C(2m, 2j) E_{2j} = 0
Integer euler_number(long m);

// memoized q-polynomial (computed by q_formula_II on first use)
const HClass& q_class(MatrixKind kind, int n, int corank);
// preload a q-polynomial (e.g. from a persistent cache); shape-checked
void seed_q_class(MatrixKind kind, int n, int corank, HClass value);
std::vector<std::pair<std::tuple<MatrixKind, int, int>, HClass>> q_class_snapshot();

// combination of q-polynomials expressing the CSM class of the open stratum;
// (corank r, integer coefficient) pairs. pre: positive codimension
std::vector<std::pair<int, Integer>> csm_open_combination(MatrixKind kind, int n, int corank);

HClass csm_open(const RankLocusSpec& s);    // open stratum (dense when codim 0)
HClass csm_dense(MatrixKind kind, int n);   // complement of all proper strata
HClass csm_closure(const RankLocusSpec& s); // sum of csm_open over coranks >= s.corank
HClass chern_mather(const RankLocusSpec& s);

} // namespace detchern
