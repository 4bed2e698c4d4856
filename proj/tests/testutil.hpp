#pragma once

// Brute-force reference implementations for the test suites. These
// deliberately share no search code with the library: plain enumeration,
// no pruning, no symmetry reduction, so any disagreement points at the
// optimized side.

#include <cstdint>
#include <vector>

#include "disckit/core.hpp"
#include "disckit/rational.hpp"

namespace testutil {

using disckit::Coloring;
using disckit::ColumnSubset;
using disckit::Matrix;
using disckit::Rational;

inline Matrix mat(int m, int n, const std::vector<long long>& flat) {
    std::vector<Rational> e;
    e.reserve(flat.size());
    for (long long v : flat) e.emplace_back(v);
    return Matrix(m, n, std::move(e));
}

inline Matrix matq(int m, int n, std::vector<Rational> flat) {
    return Matrix(m, n, std::move(flat));
}

inline Rational naive_coloring_disc(const Matrix& A, const Coloring& p) {
    Rational best = 0;
    for (int d = 1; d <= p.colors; ++d) {
        for (int i = 0; i < A.rows(); ++i) {
            Rational sum = 0;
            for (int j = 0; j < A.cols(); ++j) {
                if (p.assign[static_cast<std::size_t>(j)] == d) sum += A.at(i, j);
            }
            Rational dev = disckit::rat_abs(sum - A.row_sum(i) / p.colors);
            if (dev > best) best = dev;
        }
    }
    return best;
}

struct NaiveOpt {
    Rational value;
    Coloring witness;  // lexicographically first minimizer over all c^n
};

inline NaiveOpt naive_optimal(const Matrix& A, int c) {
    const int n = A.cols();
    Coloring p{c, std::vector<int>(static_cast<std::size_t>(n), 1)};
    NaiveOpt best{naive_coloring_disc(A, p), p};
    while (true) {
        int j = n - 1;
        while (j >= 0 && p.assign[static_cast<std::size_t>(j)] == c) {
            p.assign[static_cast<std::size_t>(j)] = 1;
            --j;
        }
        if (j < 0) break;
        ++p.assign[static_cast<std::size_t>(j)];
        Rational v = naive_coloring_disc(A, p);
        if (v < best.value) best = {v, p};
    }
    return best;
}

inline Rational naive_herdisc(const Matrix& A, int c) {
    const int n = A.cols();
    Rational best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        ColumnSubset J{n, {}};
        for (int j = 0; j < n; ++j) {
            if (mask >> j & 1) J.members.push_back(j);
        }
        Rational v = naive_optimal(disckit::restrict_columns(A, J), c).value;
        if (v > best) best = v;
    }
    return best;
}

//! min over q in {0,1}^n of max_i |z·S_i - (Aq)_i|.
inline Rational naive_wdisc(const Matrix& A, const Rational& z) {
    const int n = A.cols();
    bool first = true;
    Rational best = 0;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        Rational worst = 0;
        for (int i = 0; i < A.rows(); ++i) {
            Rational sum = 0;
            for (int j = 0; j < n; ++j) {
                if (bits >> j & 1) sum += A.at(i, j);
            }
            Rational dev = disckit::rat_abs(z * A.row_sum(i) - sum);
            if (dev > worst) worst = dev;
        }
        if (first || worst < best) {
            first = false;
            best = worst;
        }
    }
    return best;
}

inline Rational naive_wdisc_sup_grid(const Matrix& A, int grid) {
    Rational best = 0;
    for (int k = 0; k <= grid; ++k) {
        Rational v = naive_wdisc(A, Rational(k, grid));
        if (v > best) best = v;
    }
    return best;
}

//! Grid max over all column subsets: a LOWER bound on the hereditary
//! weighted value (a grid can miss a peak, never invent one).
inline Rational herwdisc_grid_lower(const Matrix& A, int grid) {
    const int n = A.cols();
    Rational best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        ColumnSubset J{n, {}};
        for (int j = 0; j < n; ++j) {
            if (mask >> j & 1) J.members.push_back(j);
        }
        Rational v = naive_wdisc_sup_grid(disckit::restrict_columns(A, J), grid);
        if (v > best) best = v;
    }
    return best;
}

}  // namespace testutil
