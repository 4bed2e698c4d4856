#include "doctest.h"

#include <cstdint>
#include <vector>

#include "disckit/disc.hpp"
#include "disckit/gen.hpp"
#include "disckit/rounding.hpp"
#include "testutil.hpp"

using namespace disckit;
using testutil::mat;

namespace {

Coloring jumbled(int n, int a, std::uint64_t seed) {
    Coloring p{a, std::vector<int>(static_cast<std::size_t>(n))};
    std::uint64_t s = seed ^ 0xd1b54a32d192ed03ULL;
    for (int j = 0; j < n; ++j) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        p.assign[static_cast<std::size_t>(j)] =
            static_cast<int>((s >> 33) % static_cast<unsigned>(a)) + 1;
    }
    return p;
}

// Recomputes the measured row deviation between two floating colorings.
Rational measured_between(const Matrix& A, const FloatingColoring& before,
                          const FloatingColoring& after) {
    return float_distance(A, before, after);
}

// Independent re-derivation of the two-state snapshot classification from
// the recorded values alone, mirroring none of the library's code paths.
void check_entry_state(const TraceEntry& e, int c, int levels) {
    const int level = levels - e.iteration;
    REQUIRE(e.tau == static_cast<int>(e.values.size()));
    CHECK(e.tau >= 1);
    CHECK(e.tau <= 2);
    for (const CaryValue& v : e.values) CHECK(v.length() <= level);
    if (e.tau == 1) {
        CHECK(e.state == 1);
        CHECK(e.carry_run == 0);
        return;
    }
    const CaryValue& big = e.values[0];
    const CaryValue& small = e.values[1];
    CHECK(big.value() > small.value());
    if (big.truncate(level - 1) == small.truncate(level - 1)) {
        CHECK(e.state == 1);
        CHECK(e.carry_run == 0);
        return;
    }
    CHECK(e.state == 2);
    // gap of one grid step at this level, smaller value carrying a full run
    CHECK(big.value() - small.value() ==
          Rational(1, int_pow(Int(c), static_cast<unsigned>(level))));
    CHECK(small.length() == level);
    CHECK(e.carry_run >= 1);
    for (int k = level; k > level - e.carry_run; --k) CHECK(small.digit(k) == c - 1);
    if (level - e.carry_run >= 1) CHECK(small.digit(level - e.carry_run) != c - 1);
    if (level - e.carry_run - 1 >= 0)
        CHECK(big.truncate(level - e.carry_run - 1) == small.truncate(level - e.carry_run - 1));
}

void check_trace(const Matrix& A, const CaryValue& z, const TransferResult& res, int c) {
    const RoundingTrace& tr = res.trace;
    REQUIRE(tr.levels == z.length());
    REQUIRE(static_cast<int>(tr.iterations.size()) == tr.levels);
    Rational worst_block = 0;
    for (const TraceEntry& e : tr.iterations) {
        check_entry_state(e, c, tr.levels);
        const int level = tr.levels - e.iteration;
        CHECK(e.step.measured <= e.step.sharp_bound);
        CHECK(e.step.sharp_bound <= e.step.relaxed_bound);
        // relaxed bound recomputed from its stated formula
        Rational worst_here = 0;
        for (const BlockReport& b : e.step.blocks) {
            if (b.oracle_disc > worst_here) worst_here = b.oracle_disc;
            if (b.oracle_disc > worst_block) worst_block = b.oracle_disc;
        }
        Rational relaxed = Rational(c - 1, 2) *
                           Rational(1, int_pow(Int(c), static_cast<unsigned>(level - 1))) *
                           e.step.tau * worst_here;
        CHECK(e.step.relaxed_bound == relaxed);
    }
    for (const Rational& v : res.final_values.values) CHECK((v == 0 || v == 1));
    CHECK(tr.reference_disc == worst_block);
    CHECK(tr.guarantee == c * tr.reference_disc);
    FloatingColoring start = FloatingColoring::constant(A.cols(), z.value());
    CHECK(tr.total_error == measured_between(A, start, res.final_values));
    CHECK(tr.total_error <= tr.guarantee);  // holds for any oracle, not just exact
}

}  // namespace

TEST_SUITE("rounding") {

TEST_CASE("class merging folds colors by residue") {
    CHECK(merge_classes(Coloring{4, {1, 2, 3, 4}}, 2).assign == std::vector<int>{1, 2, 1, 2});
    CHECK(merge_classes(Coloring{4, {1, 2, 3, 4}}, 2).colors == 2);
    CHECK(merge_classes(Coloring{3, {2, 3, 1}}, 3).assign == std::vector<int>{2, 3, 1});
    CHECK(merge_classes(Coloring{6, {5, 6}}, 3).assign == std::vector<int>{2, 3});
    CHECK_THROWS_AS(merge_classes(Coloring{4, {1, 2}}, 3), InputError);
    CHECK_THROWS_AS(merge_classes(Coloring{4, {1, 2}}, 1), InputError);
}

TEST_CASE("merged colorings cost at most the fold factor") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Matrix A = random01_matrix(3, 6, Rational(1, 2), seed);
        for (int a : {4, 6}) {
            for (int b = 2; b < a; ++b) {
                if (a % b != 0) continue;
                Coloring p = jumbled(6, a, seed * 11 + static_cast<std::uint64_t>(a * 7 + b));
                Coloring q = merge_classes(p, b);
                CHECK(coloring_disc(A, q).value <= Rational(a, b) * coloring_disc(A, p).value);
            }
        }
    }
}

TEST_CASE("constant-step rounding clears the last digit of one third") {
    Matrix A = mat(1, 3, {1, 1, 1});
    auto [p, report] = round_constant_step(A, CaryValue(3, {0, 1}), 3, {});
    CHECK(p.values == std::vector<Rational>{1, 0, 0});
    CHECK(report.measured == 0);
    CHECK(report.certified);
    CHECK(report.tau == 1);
}

TEST_CASE("constant-step rounding of two thirds raises two columns") {
    Matrix A = mat(1, 3, {1, 1, 1});
    auto [p, report] = round_constant_step(A, CaryValue(3, {0, 2}), 3, {});
    int ones = 0;
    for (const Rational& v : p.values) {
        CHECK((v == 0 || v == 1));
        if (v == 1) ++ones;
    }
    CHECK(ones == 2);
    CHECK(report.measured == 0);
}

TEST_CASE("constant-step output lands one level up the grid") {
    Matrix A = random01_matrix(2, 5, Rational(1, 2), 3);
    auto [p, report] = round_constant_step(A, CaryValue(3, {0, 1, 1}), 3, {});
    for (const Rational& v : p.values) {
        CHECK((v == Rational(1, 3) || v == Rational(2, 3)));
        auto cv = CaryValue::from_rational(v, 3);
        REQUIRE(cv.has_value());
        CHECK(cv->length() <= 1);
    }
    CHECK(report.measured <= report.sharp_bound);
    CHECK(report.sharp_bound <= report.relaxed_bound);
}

TEST_CASE("constant-step rounding validates its inputs") {
    Matrix A = mat(1, 2, {1, 1});
    CHECK_THROWS_AS(round_constant_step(A, CaryValue(2, {0, 1}), 2, {}), InputError);  // even c
    CHECK_THROWS_AS(round_constant_step(A, CaryValue(3, {0, 1}), 5, {}), InputError);  // base != c
    CHECK_THROWS_AS(round_constant_step(A, CaryValue(3, {0}), 3, {}), InputError);     // length 0
    CHECK_THROWS_AS(round_constant_step(A, CaryValue(3, {1}), 3, {}), InputError);
}

TEST_CASE("constant-step bounds hold for heuristic oracles too") {
    Matrix A = random01_matrix(3, 7, Rational(2, 5), 9);
    for (OracleKind kind : {OracleKind::greedy, OracleKind::random_restart}) {
        OracleConfig cfg;
        cfg.kind = kind;
        cfg.seed = 5;
        auto [p, report] = round_constant_step(A, CaryValue(5, {0, 2, 3}), 5, cfg);
        CHECK_FALSE(report.certified);
        CHECK(report.measured <= report.sharp_bound);
        CHECK(report.sharp_bound <= report.relaxed_bound);
        FloatingColoring before = FloatingColoring::constant(7, Rational(13, 25));
        CHECK(report.measured == measured_between(A, before, p));
    }
}

TEST_CASE("general step on a constant coloring matches the constant step") {
    Matrix A = random01_matrix(3, 6, Rational(1, 2), 4);
    CaryValue t(3, {0, 2, 1});
    auto [pc, rc] = round_constant_step(A, t, 3, {});
    auto [pg, rg] = round_step(A, FloatingColoring::constant(6, t.value()), 3, t.length(), {});
    CHECK(pg.values == pc.values);
    CHECK(rg.measured == rc.measured);
    CHECK(rg.sharp_bound == rc.sharp_bound);
    CHECK(rg.tau == 1);
}

TEST_CASE("general step passes short values through untouched") {
    Matrix A = random01_matrix(2, 4, Rational(1, 2), 6);
    FloatingColoring p{{Rational(1, 3), Rational(2, 3), Rational(0), Rational(1)}};
    auto [q, report] = round_step(A, p, 3, 2, {});  // all values already length <= 1
    CHECK(q.values == p.values);
    CHECK(report.measured == 0);
    CHECK(report.blocks.empty());
}

TEST_CASE("general step rounds only the blocks at the working level") {
    Matrix A = mat(1, 9, std::vector<long long>(9, 1));
    auto [q, report] = round_step(A, FloatingColoring::constant(9, Rational(4, 9)), 3, 2, {});
    int high = 0;
    for (int j = 0; j < 9; ++j) {
        CHECK((q.values[static_cast<std::size_t>(j)] == Rational(1, 3) ||
               q.values[static_cast<std::size_t>(j)] == Rational(2, 3)));
        if (q.values[static_cast<std::size_t>(j)] == Rational(2, 3)) ++high;
    }
    CHECK(high == 3);
    // the exact oracle's first class on an all-ones row is the first three columns
    for (int j = 0; j < 3; ++j) CHECK(q.values[static_cast<std::size_t>(j)] == Rational(2, 3));
    CHECK(report.measured == 0);
}

TEST_CASE("general step validates values against the working grid") {
    Matrix A = mat(1, 2, {1, 1});
    // 1/2 has no finite base-3 expansion
    CHECK_THROWS_AS(round_step(A, FloatingColoring{{Rational(1, 2), Rational(0)}}, 3, 2, {}),
                    InputError);
    // 4/9 has length 2, too deep for a level-1 step
    CHECK_THROWS_AS(round_step(A, FloatingColoring{{Rational(4, 9), Rational(0)}}, 3, 1, {}),
                    InputError);
    CHECK_THROWS_AS(round_step(A, FloatingColoring{{Rational(1, 3), Rational(0)}}, 3, 0, {}),
                    InputError);
}

TEST_CASE("transfer at one third rounds three ones to a single one") {
    Matrix A = mat(1, 3, {1, 1, 1});
    TransferResult res = transfer_round(A, CaryValue(3, {0, 1}), 3, {});
    Rational ones = 0;
    for (const Rational& v : res.final_values.values) ones += v;
    CHECK(ones == 1);
    CHECK(res.trace.total_error == 0);
    CHECK(res.trace.total_error == weighted_disc(A, Rational(1, 3)).value);
    CHECK(res.trace.certified);
    check_trace(A, CaryValue(3, {0, 1}), res, 3);
}

TEST_CASE("transfer of the weight one is the all-ones coloring with no iterations") {
    Matrix A = random01_matrix(2, 4, Rational(1, 2), 2);
    TransferResult res = transfer_round(A, CaryValue(3, {1}), 3, {});
    CHECK(res.trace.iterations.empty());
    CHECK(res.trace.total_error == 0);
    for (const Rational& v : res.final_values.values) CHECK(v == 1);
}

TEST_CASE("transfer error stays within the color-count multiple of the hereditary bound") {
    Matrix A = random01_matrix(3, 6, Rational(1, 2), 31);
    CaryValue z(3, {0, 1, 2});  // 5/9
    TransferResult res = transfer_round(A, z, 3, {});
    CHECK(res.trace.certified);
    Rational her = hereditary_disc(A, 3).value;
    CHECK(res.trace.total_error <= 3 * her);
    CHECK(res.trace.reference_disc <= her);
    check_trace(A, z, res, 3);
}

TEST_CASE("transfer with a greedy oracle: frozen small run") {
    Matrix A = mat(1, 3, {1, 1, 1});
    OracleConfig cfg;
    cfg.kind = OracleKind::greedy;
    CaryValue z(3, {0, 1, 1});  // 4/9
    TransferResult res = transfer_round(A, z, 3, cfg);
    CHECK_FALSE(res.trace.certified);
    CHECK(res.final_values.values == std::vector<Rational>{1, 1, 1});
    CHECK(res.trace.total_error == Rational(5, 3));
    CHECK(res.trace.reference_disc == 1);
    CHECK(res.trace.guarantee == 3);
    check_trace(A, z, res, 3);
}

TEST_CASE("transfer traces satisfy all recorded invariants across oracles and weights") {
    std::vector<Matrix> instances = {random01_matrix(3, 6, Rational(1, 2), 41),
                                     random01_matrix(2, 5, Rational(2, 3), 42),
                                     random_rational_matrix(2, 4, 2, 43),
                                     complete_hypergraph(4)};
    for (const Matrix& A : instances) {
        for (int c : {3, 5}) {
            std::vector<CaryValue> weights = {
                CaryValue(c, {0, 1}), CaryValue(c, {0, c - 1, c - 1}),
                CaryValue(c, {0, 1, 0, 1}), CaryValue(c, {0, 2, c - 1})};
            for (const CaryValue& z : weights) {
                for (OracleKind kind :
                     {OracleKind::exact, OracleKind::greedy, OracleKind::random_restart}) {
                    OracleConfig cfg;
                    cfg.kind = kind;
                    cfg.seed = 3;
                    cfg.cache = make_oracle_cache();
                    TransferResult res = transfer_round(A, z, c, cfg);
                    check_trace(A, z, res, c);
                    CHECK(res.trace.certified == (kind == OracleKind::exact));
                }
            }
        }
    }
}

TEST_CASE("transfer refuses even color counts and mismatched bases") {
    Matrix A = mat(1, 2, {1, 1});
    CHECK_THROWS_AS(transfer_round(A, CaryValue(4, {0, 2}), 4, {}), InputError);
    CHECK_THROWS_AS(transfer_round(A, CaryValue(3, {0, 1}), 5, {}), InputError);
}

TEST_CASE("even-count transfer folds the oracle coloring at weight one half") {
    Matrix A = mat(1, 4, {1, 1, 1, 1});
    EvenTransferResult res = transfer_even(A, Rational(1, 2), 2, {});
    CHECK(res.measured == 0);
    CHECK(res.merged.colors == 2);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(res.final_values.values[j] == Rational(res.merged.assign[j] == 1 ? 1 : 0));

    Matrix B = random01_matrix(3, 6, Rational(1, 2), 51);
    EvenTransferResult folded = transfer_even(B, Rational(1, 2), 4, {});
    CHECK(folded.guarantee == 2 * folded.oracle_disc);
    CHECK(folded.measured <= folded.guarantee);
    CHECK(folded.measured == coloring_disc(B, folded.merged).value);
    CHECK(folded.certified);
}

TEST_CASE("even-count transfer refuses other weights and odd counts") {
    Matrix A = mat(1, 2, {1, 1});
    CHECK_THROWS_AS(transfer_even(A, Rational(1, 3), 4, {}), InputError);
    CHECK_THROWS_AS(transfer_even(A, Rational(1, 2), 3, {}), InputError);
}

}  // TEST_SUITE
