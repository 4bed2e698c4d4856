#include "doctest.h"

#include <cstdint>
#include <vector>

#include "disckit/disc.hpp"
#include "disckit/gen.hpp"
#include "disckit/oracle.hpp"
#include "testutil.hpp"

using namespace disckit;
using testutil::mat;

namespace {

std::vector<int> class_sizes(const Coloring& p) {
    std::vector<int> sizes(static_cast<std::size_t>(p.colors), 0);
    for (int d : p.assign) ++sizes[static_cast<std::size_t>(d - 1)];
    return sizes;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("exact oracle spreads three ones over three colors, certified") {
    Matrix A = mat(1, 3, {1, 1, 1});
    OracleAnswer ans = oracle_color(A, ColumnSubset::full(3), 3, {});
    CHECK(ans.disc == 0);
    CHECK(ans.certified);
    CHECK(class_sizes(ans.coloring) == std::vector<int>{1, 1, 1});
}

TEST_CASE("exact oracle balances the complete hypergraph on six vertices") {
    Matrix H = complete_hypergraph(6);
    OracleAnswer ans = oracle_color(H, ColumnSubset::full(6), 3, {});
    CHECK(ans.disc == Rational(4, 3));
    CHECK(ans.certified);
    CHECK(class_sizes(ans.coloring) == std::vector<int>{2, 2, 2});
}

TEST_CASE("any oracle colors the empty subset with the empty coloring") {
    Matrix A = mat(2, 3, {1, 0, 1, 0, 1, 1});
    for (OracleKind kind : {OracleKind::exact, OracleKind::greedy, OracleKind::random_restart}) {
        OracleConfig cfg;
        cfg.kind = kind;
        OracleAnswer ans = oracle_color(A, ColumnSubset{3, {}}, 2, cfg);
        CHECK(ans.coloring.assign.empty());
        CHECK(ans.disc == 0);
    }
}

TEST_CASE("exact oracle reproduces the optimal search on every subset") {
    Matrix A = random01_matrix(3, 4, Rational(1, 2), 5);
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        ColumnSubset J{4, {}};
        for (int j = 0; j < 4; ++j)
            if (mask >> j & 1) J.members.push_back(j);
        for (int c = 2; c <= 3; ++c) {
            OracleAnswer ans = oracle_color(A, J, c, {});
            DiscrepancyResult opt = optimal_disc(restrict_columns(A, J), c);
            CHECK(ans.disc == opt.value);
            CHECK(ans.certified);
            CHECK(ans.coloring.assign == opt.witness.assign);
            // reported deviation is honest for the returned coloring
            CHECK(coloring_disc(restrict_columns(A, J), ans.coloring).value == ans.disc);
        }
    }
}

TEST_CASE("exact oracle answers satisfy the hereditary precondition") {
    Matrix A = random_rational_matrix(2, 4, 2, 9);
    for (int c = 2; c <= 3; ++c) {
        Rational her = hereditary_disc(A, c).value;
        for (const std::vector<int>& members :
             {std::vector<int>{}, std::vector<int>{0}, std::vector<int>{1, 3},
              std::vector<int>{0, 1, 2, 3}}) {
            OracleAnswer ans = oracle_color(A, ColumnSubset{4, members}, c, {});
            CHECK(ans.disc <= her);
        }
    }
}

TEST_CASE("exact oracle refuses over budget instead of guessing") {
    Matrix wide = mat(1, 24, std::vector<long long>(24, 1));
    OracleConfig cfg;  // default caps: 2^24 colorings exceed 10^7
    CHECK_THROWS_AS(oracle_color(wide, ColumnSubset::full(24), 2, cfg), BudgetError);
    // heuristics never refuse on the same instance
    cfg.kind = OracleKind::greedy;
    CHECK_FALSE(oracle_color(wide, ColumnSubset::full(24), 2, cfg).certified);
    cfg.kind = OracleKind::random_restart;
    CHECK_FALSE(oracle_color(wide, ColumnSubset::full(24), 2, cfg).certified);
}

TEST_CASE("greedy coloring: pinned small cases") {
    CHECK(greedy_color(mat(1, 2, {1, 1}), 2).assign == std::vector<int>{1, 2});
    CHECK(coloring_disc(mat(1, 2, {1, 1}), greedy_color(mat(1, 2, {1, 1}), 2)).value == 0);

    Matrix col = mat(2, 1, {1, 1});
    CHECK(greedy_color(col, 2).assign == std::vector<int>{1});
    CHECK(coloring_disc(col, greedy_color(col, 2)).value == Rational(1, 2));

    Matrix four = mat(1, 4, {1, 1, 1, 1});
    CHECK(greedy_color(four, 2).assign == std::vector<int>{1, 2, 1, 2});
    CHECK(coloring_disc(four, greedy_color(four, 2)).value == 0);
}

TEST_CASE("heuristic oracles upper-bound the optimum and stay uncertified") {
    Matrix A = random01_matrix(3, 5, Rational(1, 2), 13);
    ColumnSubset J = ColumnSubset::full(5);
    for (int c = 2; c <= 3; ++c) {
        Rational opt = optimal_disc(A, c).value;
        for (OracleKind kind : {OracleKind::greedy, OracleKind::random_restart}) {
            OracleConfig cfg;
            cfg.kind = kind;
            cfg.seed = 42;
            OracleAnswer ans = oracle_color(A, J, c, cfg);
            CHECK_FALSE(ans.certified);
            CHECK(ans.disc >= opt);
            CHECK(coloring_disc(A, ans.coloring).value == ans.disc);
        }
    }
}

TEST_CASE("random-restart answers are deterministic in the seed") {
    Matrix A = random01_matrix(3, 6, Rational(1, 2), 21);
    ColumnSubset J{6, {0, 2, 3, 5}};
    OracleConfig cfg;
    cfg.kind = OracleKind::random_restart;
    cfg.seed = 7;
    OracleAnswer first = oracle_color(A, J, 3, cfg);
    OracleAnswer again = oracle_color(A, J, 3, cfg);
    CHECK(first.coloring.assign == again.coloring.assign);
    CHECK(first.disc == again.disc);

    OracleConfig other = cfg;
    other.seed = 8;
    OracleAnswer moved = oracle_color(A, J, 3, other);
    CHECK(coloring_disc(restrict_columns(A, J), moved.coloring).value == moved.disc);
}

TEST_CASE("cache returns the identical answer without recomputation drift") {
    Matrix A = random01_matrix(3, 5, Rational(2, 5), 17);
    OracleConfig cached;
    cached.cache = make_oracle_cache();
    OracleConfig uncached;
    for (const std::vector<int>& members :
         {std::vector<int>{0, 1}, std::vector<int>{2, 3, 4}, std::vector<int>{0, 1},
          std::vector<int>{}, std::vector<int>{0, 1, 2, 3, 4}, std::vector<int>{0, 1}}) {
        ColumnSubset J{5, members};
        OracleAnswer hit = oracle_color(A, J, 2, cached);
        OracleAnswer miss = oracle_color(A, J, 2, uncached);
        CHECK(hit.coloring.assign == miss.coloring.assign);
        CHECK(hit.disc == miss.disc);
        CHECK(hit.certified == miss.certified);
    }
    // one cache serves distinct color counts without mixing them up
    OracleAnswer two = oracle_color(A, ColumnSubset::full(5), 2, cached);
    OracleAnswer three = oracle_color(A, ColumnSubset::full(5), 3, cached);
    CHECK(two.coloring.colors == 2);
    CHECK(three.coloring.colors == 3);
    CHECK(three.disc == optimal_disc(A, 3).value);
    CHECK(two.disc == optimal_disc(A, 2).value);
}

TEST_CASE("oracle validates its subset argument") {
    Matrix A = mat(1, 3, {1, 1, 1});
    CHECK_THROWS_AS(oracle_color(A, ColumnSubset{3, {3}}, 2, {}), InputError);
    CHECK_THROWS_AS(oracle_color(A, ColumnSubset{3, {1, 0}}, 2, {}), InputError);
    CHECK_THROWS_AS(oracle_color(A, ColumnSubset{2, {0}}, 2, {}), InputError);
}

}  // TEST_SUITE
