#include <functional>
#include <random>

#include "doctest.h"
#include "leaky/intersections.hpp"
#include "oracles.hpp"

using namespace leaky;

TEST_CASE("psi integrals") {
    CHECK(psi_integral(5, {1, 1, 0, 0, 0}) == 2);
    CHECK(psi_integral(3, {0, 0, 0}) == 1);
    CHECK(psi_integral(6, {2, 2, 0, 0, 0, 0}) == 0);
    CHECK(psi_integral(4, {0, 0, 0, 0}) == 0);
    CHECK(psi_integral(2, {0, 0}) == 0);
    CHECK(psi_integral(4, {2, -1, 0, 0}) == 0);
}

TEST_CASE("psi-kappa integrals") {
    CHECK(psi_kappa_integral(4, {0, 0, 0, 0}, 1) == 1);
    CHECK(psi_kappa_integral(5, {0, 0, 0, 0, 0}, 2) == 5);
    CHECK(psi_kappa_integral(3, {0, 0, 0}, 0) == 1);
    CHECK(psi_kappa_integral(5, {1, 0, 0, 0, 0}, 1) == 3);
    CHECK(psi_kappa_integral(4, {0, 0, 0, 0}, 2) == 0);
    CHECK(psi_kappa_integral(4, {0, 0, 0}, 1) == 0);
}

TEST_CASE("psi-kappa matches the set-partition expansion") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == n) {
                const int f = left;
                CHECK(psi_kappa_integral(n, e, f) == oracle::kappa_by_set_partitions(n, e, f));
                CHECK(psi_kappa_integral(n, e, 0) == psi_integral(n, e));
                return;
            }
            for (int v = 0; v <= left; ++v) {
                e[static_cast<std::size_t>(i)] = v;
                rec(i + 1, left - v);
            }
            e[static_cast<std::size_t>(i)] = 0;
        };
        rec(0, n - 3);
    }
}

TEST_CASE("recursion examples") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> dist(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t k = trial % 4;
        std::vector<std::int64_t> x{dist(rng), dist(rng), dist(rng), 0};
        x[3] = 2 * k - x[0] - x[1] - x[2];
        const auto p = make_problem(0, k, x, {1, 0, 0, 0});
        CHECK(recursion_rhs(p, 1, 0) == Rational(2 * x[0]));
        CHECK(recursion_lhs(p, 1, 0) == Rational(2 * x[0]));

        std::vector<std::int64_t> y{dist(rng), dist(rng), dist(rng), dist(rng), 0};
        y[4] = 3 - y[0] - y[1] - y[2] - y[3];
        const auto q = make_problem(0, 1, y, {1, 1, 0, 0, 0});
        CHECK(recursion_rhs(q, 2, 0) == Rational(3 * y[1] * 2));
    }
}

TEST_CASE("recursion with no two-vertex covers") {
    const auto p = make_problem(0, 0, {0, 0, 0, 0}, {1, 0, 0, 0});
    CHECK(recursion_rhs(p, 1, 0) == 0);
    CHECK(recursion_lhs(p, 1, 0) == 0);
}

TEST_CASE("recursion preconditions") {
    const auto p = make_problem(0, 1, {3, -1, 1, -1}, {1, 0, 0, 0});
    CHECK_THROWS_AS(recursion_rhs(p, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(recursion_rhs(p, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(recursion_rhs(p, 9, 0), std::invalid_argument);
    CHECK_THROWS_AS(recursion_rhs(make_problem(1, 1, {2, -1}, {1, 0}), 1, 0), std::invalid_argument);
}
