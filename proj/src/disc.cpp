#include "disckit/disc.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "scaled.hpp"

namespace disckit {

namespace {

std::vector<int> all_columns(int n) {
    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    return cols;
}

void check_colors(int c) {
    if (c < 2) throw InputError("color count must be at least 2, got " + std::to_string(c));
}

//! Search-space size check: `count = base^n` against `cap`.
void check_budget(const char* what, int base, int n, std::uint64_t cap) {
    Int count = int_pow(Int(base), static_cast<unsigned>(n));
    if (count > Int(cap))
        throw BudgetError(std::string(what) + ": " + std::to_string(base) + "^" +
                          std::to_string(n) + " = " + count.str() + " exceeds cap " +
                          std::to_string(cap));
}

std::vector<int> mask_columns(unsigned long long mask, int n) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
        if (mask >> j & 1ULL) cols.push_back(j);
    return cols;
}

WeightedWitness weighted_at(const detail::ScaledMatrix& S, std::span<const int> cols,
                            const Rational& z) {
    detail::WeightedSearch ws = detail::search_weighted(S, cols, numer(z), denom(z));
    WeightedWitness w;
    w.z = z;
    w.value = Rational(ws.dev, denom(z) * S.scale);
    w.q.values.reserve(cols.size());
    for (std::uint8_t bit : ws.q) w.q.values.emplace_back(static_cast<int>(bit));
    w.witness_row = ws.row;
    w.work = ws.leaves;
    return w;
}

//! Smallest maximizer of weighted_disc over z in [0,1], for one column set.
WeightedWitness sup_over_z(const detail::ScaledMatrix& S, std::span<const int> cols) {
    WeightedWitness best;
    std::uint64_t total_work = 0;
    bool found = false;
    for (const Rational& z : detail::weighted_sup_candidates(S, cols)) {
        WeightedWitness cur = weighted_at(S, cols, z);
        total_work += cur.work;
        if (!found || cur.value > best.value) {
            found = true;
            best = cur;
        }
    }
    best.work = total_work;
    return best;
}

}  // namespace

DiscrepancyResult coloring_disc(const Matrix& A, const Coloring& p) {
    p.validate();
    if (p.cols() != A.cols())
        throw InputError("coloring has " + std::to_string(p.cols()) + " columns, matrix has " +
                         std::to_string(A.cols()));
    detail::ScaledMatrix S(A);
    std::vector<int> cols = all_columns(A.cols());
    detail::ColoringEval ev = detail::eval_coloring(S, cols, p.assign, p.colors);
    DiscrepancyResult r;
    r.value = Rational(ev.dev, Int(p.colors) * S.scale);
    r.witness = p;
    r.witness_row = ev.row;
    r.witness_color = ev.color;
    r.witness_subset = ColumnSubset::full(A.cols());
    r.work = 1;
    return r;
}

DiscrepancyResult optimal_disc(const Matrix& A, int c, const Budget& budget) {
    check_colors(c);
    check_budget("optimal_disc", c, A.cols(), budget.coloring_cap);
    detail::ScaledMatrix S(A);
    std::vector<int> cols = all_columns(A.cols());
    detail::ColoringSearch cs = detail::search_optimal_coloring(S, cols, c);
    DiscrepancyResult r;
    r.value = Rational(cs.dev, Int(c) * S.scale);
    r.witness = Coloring{c, cs.assign};
    r.witness_row = cs.row;
    r.witness_color = cs.color;
    r.witness_subset = ColumnSubset::full(A.cols());
    r.work = cs.leaves;
    return r;
}

DiscrepancyResult hereditary_disc(const Matrix& A, int c, const Budget& budget) {
    check_colors(c);
    check_budget("hereditary_disc", 2 * c, A.cols(), budget.total_cap);
    detail::ScaledMatrix S(A);
    const Int denom_all = Int(c) * S.scale;

    DiscrepancyResult best;
    Int best_dev(-1);
    std::uint64_t total_work = 0;
    const unsigned long long end = 1ULL << A.cols();
    for (unsigned long long mask = 0; mask < end; ++mask) {
        std::vector<int> cols = mask_columns(mask, A.cols());
        detail::ColoringSearch cs = detail::search_optimal_coloring(S, cols, c);
        total_work += cs.leaves;
        if (cs.dev > best_dev) {  // strict: keep the first maximizing subset
            best_dev = cs.dev;
            best.value = Rational(cs.dev, denom_all);
            best.witness = Coloring{c, cs.assign};
            best.witness_row = cs.row;
            best.witness_color = cs.color;
            best.witness_subset = ColumnSubset{A.cols(), std::move(cols)};
        }
    }
    best.work = total_work;
    return best;
}

WeightedWitness weighted_disc(const Matrix& A, const Rational& z, const Budget& budget) {
    if (z < 0 || z > 1) throw InputError("weight must lie in [0,1], got " + rat_str(z));
    check_budget("weighted_disc", 2, A.cols(), budget.coloring_cap);
    detail::ScaledMatrix S(A);
    std::vector<int> cols = all_columns(A.cols());
    return weighted_at(S, cols, z);
}

WeightedWitness weighted_disc_sup(const Matrix& A, const Budget& budget) {
    check_budget("weighted_disc_sup", 2, A.cols(), budget.coloring_cap);
    detail::ScaledMatrix S(A);
    std::vector<int> cols = all_columns(A.cols());
    return sup_over_z(S, cols);
}

HereditaryWeightedResult hereditary_weighted_disc(const Matrix& A, const Budget& budget) {
    check_budget("hereditary_weighted_disc", 4, A.cols(), budget.total_cap);
    detail::ScaledMatrix S(A);

    HereditaryWeightedResult best;
    std::uint64_t total_work = 0;
    bool found = false;
    const unsigned long long end = 1ULL << A.cols();
    for (unsigned long long mask = 0; mask < end; ++mask) {
        std::vector<int> cols = mask_columns(mask, A.cols());
        WeightedWitness cur = sup_over_z(S, cols);
        total_work += cur.work;
        if (!found || cur.value > best.witness.value) {  // first maximizing subset
            found = true;
            best.witness = cur;
            best.subset = ColumnSubset{A.cols(), std::move(cols)};
        }
    }
    best.work = total_work;
    return best;
}

Rational float_distance(const Matrix& A, const FloatingColoring& p, const FloatingColoring& q) {
    p.validate();
    q.validate();
    if (p.cols() != A.cols() || q.cols() != A.cols())
        throw InputError("fractional colorings must match the matrix column count");
    Rational worst(0);
    for (int i = 0; i < A.rows(); ++i) {
        Rational s(0);
        for (int j = 0; j < A.cols(); ++j) s += A.at(i, j) * (p.values[j] - q.values[j]);
        if (rat_abs(s) > worst) worst = rat_abs(s);
    }
    return worst;
}

}  // namespace disckit
