#pragma once

//! Exact discrepancy computations. Every function returns certified-exact
//! rationals together with an attaining witness; searches that would exceed
//! the enumeration budget refuse by throwing BudgetError instead of
//! degrading to a heuristic.

#include <cstdint>

#include "disckit/core.hpp"

namespace disckit {

//! Deviation of a fixed c-coloring: max over rows i and classes d (empty
//! classes included) of |Σ_{p(j)=d} a_ij - (1/c)·Σ_j a_ij|. The witness
//! fields name the first attaining (row, class) pair.
DiscrepancyResult coloring_disc(const Matrix& A, const Coloring& p);

//! Minimum deviation over all c-colorings of the columns. The witness is
//! the lexicographically first optimal coloring. Requires c^n within the
//! coloring budget.
DiscrepancyResult optimal_disc(const Matrix& A, int c, const Budget& budget = {});

//! Hereditary discrepancy: max of optimal_disc over all column subsets
//! (rows are never restricted: dropping rows only shrinks every max, so
//! column subsets attain the hereditary value). witness_subset holds the
//! first maximizing subset in binary-counter order. Requires (2c)^n within
//! the total budget.
DiscrepancyResult hereditary_disc(const Matrix& A, int c, const Budget& budget = {});

struct WeightedWitness {
    Rational z;          //! weight the rounding was measured against
    Rational value;      //! max_i |z·S_i - (Aq)_i|
    FloatingColoring q;  //! 0/1 rounding attaining it (first with 1 preferred
                         //! per position, mirroring color-1-first colorings)
    int witness_row = 0;
    std::uint64_t work = 0;
};

//! Best 0/1 rounding of the constant-z fractional coloring: min over
//! q ∈ {0,1}^n of max_i |z·S_i - (Aq)_i|. Requires z ∈ [0,1] and 2^n
//! within the coloring budget.
WeightedWitness weighted_disc(const Matrix& A, const Rational& z, const Budget& budget = {});

//! Max of weighted_disc over z ∈ [0,1]. The max is attained either at an
//! endpoint or where two row deviation lines cross with equal magnitude, so
//! only finitely many z need evaluation; the returned z is the smallest
//! maximizer among them.
WeightedWitness weighted_disc_sup(const Matrix& A, const Budget& budget = {});

struct HereditaryWeightedResult {
    WeightedWitness witness;
    ColumnSubset subset;  //! first maximizing column subset
    std::uint64_t work = 0;
};

//! Max of weighted_disc_sup over all column subsets. Requires 4^n within
//! the total budget.
HereditaryWeightedResult hereditary_weighted_disc(const Matrix& A, const Budget& budget = {});

//! d_A(p, q) = max_i |Σ_j a_ij (p(j) - q(j))| for fractional colorings.
Rational float_distance(const Matrix& A, const FloatingColoring& p, const FloatingColoring& q);

}  // namespace disckit
