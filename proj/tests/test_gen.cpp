#include "doctest.h"

#include <vector>

#include "disckit/disc.hpp"
#include "disckit/gen.hpp"
#include "testutil.hpp"

using namespace disckit;
using testutil::mat;

TEST_SUITE("gen") {

TEST_CASE("complete hypergraph on two vertices lists the three nonempty edges") {
    Matrix H = complete_hypergraph(2);
    CHECK(H.rows() == 3);
    CHECK(H.cols() == 2);
    CHECK(H.entries() == std::vector<Rational>{1, 0, 0, 1, 1, 1});
}

TEST_CASE("complete hypergraph rows follow binary counting order") {
    Matrix H = complete_hypergraph(4);
    REQUIRE(H.rows() == 15);
    for (int k = 1; k <= 15; ++k)
        for (int j = 0; j < 4; ++j) CHECK(H.at(k - 1, j) == Rational(k >> j & 1));
    CHECK(H.zero_one());
}

TEST_CASE("complete hypergraph bounds its vertex count") {
    CHECK_THROWS_AS(complete_hypergraph(0), InputError);
    CHECK_THROWS_AS(complete_hypergraph(17), BudgetError);
    CHECK(complete_hypergraph(1).rows() == 1);
}

TEST_CASE("closed-form deviation of the complete family: pinned profiles") {
    CHECK(complete_disc_closed_form(12, 3, {4, 4, 4}) == Rational(8, 3));
    CHECK(complete_disc_closed_form(4, 2, {2, 2}) == 1);
    CHECK(complete_disc_closed_form(4, 2, {2, 2}) == optimal_disc(complete_hypergraph(4), 2).value);
    CHECK(complete_disc_closed_form(6, 3, {2, 2, 2}) == Rational(4, 3));
    // unbalanced profile: the monochromatic edge of the big class dominates
    CHECK(complete_disc_closed_form(4, 2, {4, 0}) == 2);
    CHECK_THROWS_AS(complete_disc_closed_form(4, 2, {3, 2}), InputError);
    CHECK_THROWS_AS(complete_disc_closed_form(4, 2, {4}), InputError);
}

TEST_CASE("closed form with equal classes matches the optimal search wherever classes divide") {
    for (int n = 2; n <= 6; ++n) {
        for (int c = 2; c <= n; ++c) {
            if (n % c != 0) continue;
            Rational closed = complete_disc_closed_form(n, c, balanced_class_sizes(n, c));
            CHECK(closed == optimal_disc(complete_hypergraph(n), c).value);
        }
    }
}

TEST_CASE("any coloring of the complete hypergraph costs its class-size profile") {
    // the closed form evaluates arbitrary profiles, not just balanced ones
    Matrix H = complete_hypergraph(5);
    const std::vector<std::vector<int>> assigns = {{1, 1, 2, 2, 3}, {1, 1, 1, 1, 2}, {1, 2, 3, 1, 2}};
    for (const std::vector<int>& assign : assigns) {
        std::vector<int> sizes(3, 0);
        for (int d : assign) ++sizes[static_cast<std::size_t>(d - 1)];
        CHECK(coloring_disc(H, Coloring{3, assign}).value ==
              complete_disc_closed_form(5, 3, sizes));
    }
}

TEST_CASE("hereditary deviation collapses to the plain optimum on the complete family") {
    for (int n = 2; n <= 6; ++n) {
        Matrix H = complete_hypergraph(n);
        for (int c : {2, 3}) {
            CHECK(hereditary_disc(H, c).value == optimal_disc(H, c).value);
        }
    }
}

TEST_CASE("balanced class sizes split the remainder over the first classes") {
    CHECK(balanced_class_sizes(6, 3) == std::vector<int>{2, 2, 2});
    CHECK(balanced_class_sizes(7, 3) == std::vector<int>{3, 2, 2});
    CHECK(balanced_class_sizes(5, 2) == std::vector<int>{3, 2});
    CHECK(balanced_class_sizes(2, 4) == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("paired-block hypergraph: smallest case is the single full edge") {
    Matrix H = balanced_pair_hypergraph(1);
    CHECK(H.rows() == 1);
    CHECK(H.entries() == std::vector<Rational>{1, 1});
}

TEST_CASE("paired-block hypergraph row counts match the binomial identity") {
    // edges pick k of the first block and k of the second: sum of C(n,k)^2
    CHECK(balanced_pair_hypergraph(2).rows() == 5);
    CHECK(balanced_pair_hypergraph(3).rows() == 19);
    CHECK(balanced_pair_hypergraph(2).cols() == 4);
    CHECK(balanced_pair_hypergraph(3).cols() == 6);
    Matrix H = balanced_pair_hypergraph(3);
    for (int i = 0; i < H.rows(); ++i) {
        Rational left = 0, right = 0;
        for (int j = 0; j < 3; ++j) left += H.at(i, j);
        for (int j = 3; j < 6; ++j) right += H.at(i, j);
        CHECK(left == right);
        CHECK(left >= 1);
    }
    CHECK_THROWS_AS(balanced_pair_hypergraph(0), InputError);
    CHECK_THROWS_AS(balanced_pair_hypergraph(7), BudgetError);
}

TEST_CASE("paired-block hypergraph balances perfectly in two colors") {
    for (int n = 1; n <= 4; ++n) CHECK(optimal_disc(balanced_pair_hypergraph(n), 2).value == 0);
}

TEST_CASE("paired-block hypergraph resists three and four colors") {
    for (int c : {3, 4}) {
        for (int n = 1; n <= 3; ++n) {
            CHECK(optimal_disc(balanced_pair_hypergraph(n), c).value >= Rational(n, c));
        }
    }
}

TEST_CASE("paired-block hereditary deviation sits between the stated bounds") {
    for (int n = 1; n <= 3; ++n) {
        Rational her = hereditary_disc(balanced_pair_hypergraph(n), 3).value;
        CHECK(her >= Rational(n, 3));
        CHECK(her <= Rational(2 * n, 3));
    }
}

TEST_CASE("random 0/1 matrices honor the density endpoints and the seed") {
    Matrix ones = random01_matrix(3, 4, Rational(1), 9);
    for (const Rational& v : ones.entries()) CHECK(v == 1);
    Matrix zero = random01_matrix(3, 4, Rational(0), 9);
    for (const Rational& v : zero.entries()) CHECK(v == 0);
    CHECK(optimal_disc(zero, 2).value == 0);

    Matrix a = random01_matrix(4, 6, Rational(1, 2), 33);
    Matrix b = random01_matrix(4, 6, Rational(1, 2), 33);
    CHECK(a.entries() == b.entries());
    CHECK(a.zero_one());
    Matrix c = random01_matrix(4, 6, Rational(1, 2), 34);
    CHECK(a.entries() != c.entries());

    CHECK_THROWS_AS(random01_matrix(2, 2, Rational(3, 2), 1), InputError);
}

TEST_CASE("random rational matrices stay within the bound, deterministically") {
    Matrix a = random_rational_matrix(3, 5, 2, 77);
    Matrix b = random_rational_matrix(3, 5, 2, 77);
    CHECK(a.entries() == b.entries());
    for (const Rational& v : a.entries()) {
        CHECK(v >= -2);
        CHECK(v <= 2);
    }
    CHECK(a.entries() != random_rational_matrix(3, 5, 2, 78).entries());
    CHECK_THROWS_AS(random_rational_matrix(2, 2, 0, 1), InputError);
}

TEST_CASE("instance specs dispatch to their family generators") {
    InstanceSpec complete;
    complete.family = Family::complete;
    complete.n = 3;
    CHECK(make_instance(complete).entries() == complete_hypergraph(3).entries());
    CHECK(instance_label(complete) == "complete-3");

    InstanceSpec pair;
    pair.family = Family::balanced_pair;
    pair.n = 2;
    CHECK(make_instance(pair).rows() == 5);
    CHECK(instance_label(pair) == "balanced-pair-2");

    InstanceSpec rnd;
    rnd.family = Family::random01;
    rnd.m = 3;
    rnd.n = 4;
    rnd.density = Rational(1, 3);
    rnd.seed = 12;
    CHECK(make_instance(rnd).entries() == random01_matrix(3, 4, Rational(1, 3), 12).entries());
    CHECK(instance_label(rnd) == "random01-s12-3x4");

    InstanceSpec rq;
    rq.family = Family::random_rational;
    rq.m = 2;
    rq.n = 3;
    rq.bound = 2;
    rq.seed = 5;
    CHECK(make_instance(rq).entries() == random_rational_matrix(2, 3, 2, 5).entries());
    CHECK(instance_label(rq) == "randomq-s5-2x3");

    InstanceSpec named = rnd;
    named.label = "mycase";
    CHECK(instance_label(named) == "mycase");

    InstanceSpec file;
    file.family = Family::file;
    file.path = "x.json";
    CHECK_THROWS_AS(make_instance(file), InputError);
    CHECK(instance_label(file) == "x.json");
}

}  // TEST_SUITE
