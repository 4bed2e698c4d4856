#pragma once

//! Coloring providers for the rounding pipeline: given any column submatrix,
//! produce a c-coloring of it. The exact kind returns a provably optimal
//! coloring (so its deviation is at most the hereditary discrepancy of the
//! parent, by definition); heuristic kinds never refuse but mark their
//! answers uncertified, and every bound downstream then degrades honestly
//! from "c · herdisc" to "c · worst observed oracle deviation".

#include <cstdint>
#include <memory>

#include "disckit/core.hpp"

namespace disckit {

enum class OracleKind { exact, greedy, random_restart };

//! Coloring of restrict(A, J) (positions follow J.members) plus its exact
//! deviation there. `certified` is true iff the coloring is provably
//! optimal for the submatrix.
struct OracleAnswer {
    Coloring coloring;
    Rational disc;
    bool certified = false;
    std::uint64_t work = 0;
};

//! Subset-keyed memo. Behaves as if all lookups were serialized: the first
//! computation for a (subset, color count) key wins and every later call
//! sees that same answer for the process lifetime. Share one cache only
//! across calls with the same parent matrix and config.
class OracleCache;

std::shared_ptr<OracleCache> make_oracle_cache();

struct OracleConfig {
    OracleKind kind = OracleKind::exact;
    std::uint64_t seed = 0;  // heuristic kinds only; exact ignores it
    Budget budget{};
    std::shared_ptr<OracleCache> cache;  // optional
};

//! c-coloring of the column submatrix restrict(A, J).
//! exact: full optimal search, certified, refuses over budget.
//! greedy: deterministic heuristic (see greedy_color), never refuses.
//! random-restart: seeded restarts + local descent, deterministic for a
//! given (seed, subset), never refuses.
OracleAnswer oracle_color(const Matrix& A, const ColumnSubset& J, int c, const OracleConfig& cfg);

//! Assigns columns left to right, each to the color whose choice minimizes
//! the running deviation against the full row sums; ties take the smallest
//! color. Deterministic given the column order.
Coloring greedy_color(const Matrix& A, int c);

}  // namespace disckit
