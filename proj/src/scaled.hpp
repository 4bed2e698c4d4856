#pragma once

// Internal enumeration kernels. All searches run on a denominator-cleared
// copy of the matrix: with L the lcm of entry denominators, every kernel
// quantity is the target rational times a fixed positive integer (c*L for
// coloring deviations, zd*L for weighted deviations), so ordering tests are
// exact integer comparisons and no gcd normalization happens in the loops.

#include <cstdint>
#include <span>
#include <vector>

#include "disckit/core.hpp"

namespace disckit::detail {

struct ScaledMatrix {
    int m = 0;
    int n = 0;
    Int scale = 1;       // L: entries b = L * a are integers
    std::vector<Int> b;  // row-major
    bool nonneg = true;
    bool zero_one = true;

    explicit ScaledMatrix(const Matrix& A);
    const Int& at(int i, int j) const { return b[static_cast<std::size_t>(i) * n + j]; }
};

//! Subset row sums Σ_{j∈cols} b_ij.
std::vector<Int> subset_row_sums(const ScaledMatrix& S, std::span<const int> cols);

struct ColoringEval {
    Int dev;  // disc * (c * scale)
    int row = 0;
    int color = 1;  // 1-based
};
//! Deviation of a fixed coloring (assign[pos] colors column cols[pos]).
//! The max runs over all c classes, including empty ones.
ColoringEval eval_coloring(const ScaledMatrix& S, std::span<const int> cols,
                           const std::vector<int>& assign, int c);

struct ColoringSearch {
    Int dev;  // optimal disc * (c * scale)
    std::vector<int> assign;
    int row = 0;
    int color = 1;
    std::uint64_t leaves = 0;
};
//! Exact minimum over all colorings of the chosen columns. Enumerates one
//! coloring per color-permutation orbit (restricted growth order), which is
//! sound because the deviation max runs over all classes symmetrically; the
//! returned witness is the lexicographically first optimal coloring overall.
//! For nonnegative matrices, subtrees whose partial positive deviation
//! already reaches the incumbent are cut; cuts never hide a strict improver
//! or an earlier tie, so value and witness are unaffected.
ColoringSearch search_optimal_coloring(const ScaledMatrix& S, std::span<const int> cols, int c);

struct WeightedSearch {
    Int dev;  // value * (zd * scale)
    std::vector<std::uint8_t> q;
    int row = 0;
    std::uint64_t leaves = 0;
};
//! Exact min over q ∈ {0,1}^cols of max_i |z·S_i - (Aq)_i| for z = zn/zd,
//! all scaled by zd*scale. The q = 1 branch is explored first, so the
//! witness is the first minimizer under the order 1 < 0 per position; this
//! matches the color-1-first convention for coloring witnesses (q = 1 on
//! class 1), making the z = 1/2 witness agree with the optimal 2-coloring.
WeightedSearch search_weighted(const ScaledMatrix& S, std::span<const int> cols, const Int& zn,
                               const Int& zd);

//! Sorted deduplicated z-candidates in [0,1] at which the max over z of the
//! weighted discrepancy can occur: the endpoints plus every intersection of
//! two lines z·S_i - u = ±(z·S_i' - u') with u, u' achievable subset sums
//! of rows i, i'. Works on deduplicated (row sum, subset sum) pairs.
std::vector<Rational> weighted_sup_candidates(const ScaledMatrix& S, std::span<const int> cols);

}  // namespace disckit::detail
