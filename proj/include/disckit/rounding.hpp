#pragma once

//! Constructive digit rounding: turns a constant fractional coloring with a
//! finite base-c expansion into a 0/1 coloring by clearing one digit
//! position per iteration with the help of a c-coloring oracle, keeping the
//! accumulated row deviation within c times the worst oracle deviation.

#include <utility>
#include <vector>

#include "disckit/cary.hpp"
#include "disckit/core.hpp"
#include "disckit/oracle.hpp"

namespace disckit {

//! Folds a colors down to b dividing a: q(j) = ((p(j) - 1) mod b) + 1.
//! For any matrix, the deviation of the merged coloring is at most (a/b)
//! times the deviation of p, since each merged class unions a/b classes.
Coloring merge_classes(const Coloring& p, int b);

//! One block's rounding record inside a step.
struct BlockReport {
    ColumnSubset block;        // columns holding the rounded value
    CaryValue value;           // that value; its length is the step level
    Coloring oracle_coloring;  // c-coloring of the block submatrix
    Rational oracle_disc;      // its exact deviation on the block
    bool certified = false;
    Rational measured;  // row-deviation cost of this block alone
    Rational sharp;     // c^(1-L) · min(t_L, c-t_L) · oracle_disc
};

//! Report for one rounding step at level L.
struct StepReport {
    Rational measured;       // d_A(before, after) over the full matrix
    Rational sharp_bound;    // Σ over rounded blocks of their sharp terms
    Rational relaxed_bound;  // ((c-1)/2) · c^(1-L) · tau · max oracle_disc
    int tau = 1;             // distinct values before the step
    std::vector<BlockReport> blocks;  // rounded blocks, by smallest column
    bool certified = true;            // all oracle answers certified
};

//! Rounds the constant coloring t·1_n (t of length L >= 1) to values of
//! length <= L-1: columns in the oracle's first t_L classes move up to
//! trunc(t, L-1) + c^(1-L), the rest drop to trunc(t, L-1). Requires odd c.
//! The measured error obeys both recorded bounds for any oracle coloring.
std::pair<FloatingColoring, StepReport> round_constant_step(const Matrix& A, const CaryValue& t,
                                                            int c, const OracleConfig& cfg);

//! One general step at the given level: groups columns into blocks by value
//! (every value must have a finite base-c expansion of length <= level),
//! rounds each block whose value has length exactly `level` via
//! round_constant_step on its submatrix, and passes shorter values through
//! untouched. Blocks touch disjoint columns, so per-block errors add.
std::pair<FloatingColoring, StepReport> round_step(const Matrix& A, const FloatingColoring& p,
                                                   int c, int level, const OracleConfig& cfg);

//! Snapshot of the coloring entering iteration i, plus that step's report.
struct TraceEntry {
    int iteration;                  // 0-based; level rounded = levels - iteration
    std::vector<CaryValue> values;  // distinct values, descending
    int tau;                        // values.size(); at most 2 from a constant start
    int state;      // 1: equal truncations above the last digit; 2: carry gap
    int carry_run;  // o for state 2 (trailing base-1 digits of the smaller value)
    StepReport step;
};

struct RoundingTrace {
    int colors = 0;
    int levels = 0;  // expansion length of the starting value
    std::vector<TraceEntry> iterations;
    Rational total_error;     // d_A(z·1_n, final)
    Rational reference_disc;  // worst oracle deviation over all blocks
    Rational guarantee;       // c · reference_disc; certified runs obey it
    bool certified = true;
};

struct TransferResult {
    FloatingColoring final_values;  // {0,1}-valued
    RoundingTrace trace;
};

//! Full transfer: starting from z·1_n, applies one round_step per digit of
//! z (level descending) until all values are 0 or 1. Requires odd c. With
//! the exact oracle the total error is at most c · herdisc(A, c); the trace
//! records the oracle-relative guarantee actually achieved.
TransferResult transfer_round(const Matrix& A, const CaryValue& z, int c, const OracleConfig& cfg);

struct EvenTransferResult {
    Coloring merged;                // 2-coloring obtained by folding classes
    FloatingColoring final_values;  // 1 where merged is color 1, else 0
    Coloring oracle_coloring;
    Rational oracle_disc;
    Rational measured;   // d_A((1/2)·1_n, final) = deviation of merged
    Rational guarantee;  // (c/2) · oracle_disc
    bool certified = false;
};

//! Even color counts: only z = 1/2 has a constructive path here (fold the
//! oracle's c classes in half); any other weight is refused and is covered
//! by the value-level verification checks instead.
EvenTransferResult transfer_even(const Matrix& A, const Rational& z, int c,
                                 const OracleConfig& cfg);

}  // namespace disckit
