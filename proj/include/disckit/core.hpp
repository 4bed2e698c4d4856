#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace disckit {

//! Malformed or out-of-contract input (bad dimensions, indices, values).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

//! Explicit refusal: the requested exact enumeration exceeds the configured
//! cap. Never downgraded to a heuristic silently; callers decide.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//! Enumeration caps. `coloring_cap` bounds a single search space (c^n or 2^n
//! colorings); `total_cap` bounds the summed work of hereditary sweeps over
//! all column subsets.
struct Budget {
    std::uint64_t coloring_cap = 10'000'000;
    std::uint64_t total_cap = 100'000'000;
};

//! Dense rational matrix, immutable after construction. Rows are hypergraph
//! edges in the incidence case; entries are arbitrary rationals otherwise.
//! Row sums are precomputed since every discrepancy formula needs them.
class Matrix {
  public:
    Matrix(int m, int n, std::vector<Rational> entries);

    int rows() const { return m_; }
    int cols() const { return n_; }
    const Rational& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& row_sum(int i) const { return row_sums_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool nonnegative() const { return nonneg_; }
    bool zero_one() const { return zero_one_; }

  private:
    int m_ = 0;
    int n_ = 0;
    std::vector<Rational> entries_;   // row-major, size m*n
    std::vector<Rational> row_sums_;
    bool nonneg_ = true;
    bool zero_one_ = true;
};

//! Strictly increasing 0-based column indices into a parent matrix.
//! Certificates serialize these 1-based; see io.
struct ColumnSubset {
    int parent_n = 0;
    std::vector<int> members;

    static ColumnSubset full(int n);
    void validate() const;
    int size() const { return static_cast<int>(members.size()); }
};

//! Assignment of every column to one of c >= 2 color classes, colors 1..c.
struct Coloring {
    int colors = 2;
    std::vector<int> assign;  // size n, values in 1..colors

    int cols() const { return static_cast<int>(assign.size()); }
    void validate() const;
};

//! Fractional column values in [0,1]; 2-colorings are the {0,1}-valued case.
struct FloatingColoring {
    std::vector<Rational> values;

    int cols() const { return static_cast<int>(values.size()); }
    void validate() const;

    static FloatingColoring constant(int n, const Rational& v);
};

//! Certificate for a discrepancy value: the witness coloring together with
//! the row and color class attaining the max. Hereditary quantities also
//! carry the witness column subset; `witness` then colors that submatrix.
//! `work` counts colorings examined by the search that produced the value.
struct DiscrepancyResult {
    Rational value;
    Coloring witness;
    int witness_row = 0;    // 0-based
    int witness_color = 1;  // 1-based color class
    ColumnSubset witness_subset;
    std::uint64_t work = 0;
};

//! Column submatrix in member order. Rows are kept as-is (restriction never
//! drops rows; duplicate or empty rows are harmless for every max).
Matrix restrict_columns(const Matrix& A, const ColumnSubset& J);

//! Exact Σ_j a_ij · x(j) for row i (0-based).
Rational evaluate_row(const Matrix& A, const FloatingColoring& x, int i);

}  // namespace disckit
