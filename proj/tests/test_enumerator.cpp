#include <algorithm>
#include <random>

#include "doctest.h"
#include "leaky/enumerator.hpp"
#include "oracles.hpp"

using namespace leaky;

namespace {

std::vector<std::int64_t> random_profile(std::mt19937_64& rng, int n, std::int64_t k, int g, std::int64_t range) {
    std::uniform_int_distribution<std::int64_t> dist(-range, range);
    std::vector<std::int64_t> x(static_cast<std::size_t>(n));
    std::int64_t sum = 0;
    for (int i = 0; i + 1 < n; ++i) {
        x[static_cast<std::size_t>(i)] = dist(rng);
        sum += x[static_cast<std::size_t>(i)];
    }
    x.back() = k * (2 * g - 2 + n) - sum;
    return x;
}

std::vector<Rational> sorted_mults(const std::vector<WeightedCover>& covers) {
    std::vector<Rational> m;
    for (const auto& wc : covers) {
        m.push_back(wc.multiplicity);
    }
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace

TEST_CASE("combinatorial types") {
    const auto five = enumerate_types(make_problem(0, 1, {6, -1, -1, 1, -2}, {1, 0, 0, 0, 0}));
    CHECK(five.size() == 6);
    for (const auto& t : five) {
        CHECK(t.vertices.size() == 2);
        CHECK(t.first_betti() == 0);
        // psi_1 sits on the vertex carrying end 1, which has three ends.
        const auto& big = t.vertices[0].ends.front() == 1 ? t.vertices[0] : t.vertices[1];
        CHECK(big.ends.size() == 3);
        CHECK(big.ends.front() == 1);
    }
    CHECK(enumerate_types(make_problem(0, 1, {3, -1, -1})).size() == 1);
    // Trivalent trees with four labelled leaves.
    CHECK(enumerate_types(make_problem(0, 0, {0, 0, 0, 0})).size() == 3);
    CHECK(enumerate_types(make_problem(0, 0, {0, 0, 0, 0, 0})).size() == 15);
    CHECK(enumerate_types(make_problem(0, 0, {0, 0, 0, 0, 0, 0})).size() == 105);
}

TEST_CASE("tree weight forms") {
    const Problem p = make_problem(0, 1, {6, -1, -1, 1, -2}, {1, 0, 0, 0, 0});
    bool found = false;
    for (const auto& t : enumerate_types(p)) {
        if (t.vertices[0].ends == std::vector<int>{1, 2, 3}) {
            const auto forms = solve_weights_tree(p, t);
            REQUIRE(forms.size() == 1);
            CHECK(forms[0].str() == "x1+x2+x3-2k");
            found = true;
        }
    }
    CHECK(found);
    const Problem q = make_problem(0, 1, {3, 1, -1, -1});
    for (const auto& t : enumerate_types(q)) {
        if (t.vertices[0].ends == std::vector<int>{1, 2}) {
            CHECK(solve_weights_tree(q, t)[0].str() == "x1+x2-k");
        }
    }
    const auto single = enumerate_types(make_problem(0, 1, {3, -1, -1}));
    CHECK(solve_weights_tree(make_problem(0, 1, {3, -1, -1}), single[0]).empty());
}

TEST_CASE("linear extensions") {
    CHECK(count_linear_extensions(2, {{0, 1}}) == 1);
    CHECK(count_linear_extensions(5, {}) == 120);
    CHECK(count_linear_extensions(3, {{0, 1}, {1, 2}, {2, 0}}) == 0);
    CHECK(linear_extensions(3, {{0, 1}, {1, 2}, {2, 0}}).empty());
    // Two chains of length one glued under a common sink: the interlacing binom(2;1,1).
    CHECK(count_linear_extensions(3, {{0, 2}, {1, 2}}) == 2);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const int nv = 1 + trial % 7;
        std::vector<Arc> arcs;
        std::uniform_int_distribution<int> pick(0, nv - 1);
        const int na = trial % 9;
        for (int i = 0; i < na && nv > 1; ++i) {
            int a = pick(rng);
            int b = pick(rng);
            if (a != b) {
                if (trial % 3 != 0 && a > b) {
                    std::swap(a, b);
                }
                arcs.emplace_back(a, b);
            }
        }
        const auto brute = oracle::brute_linear_extensions(nv, arcs);
        CHECK(count_linear_extensions(nv, arcs) == brute);
        const auto all = linear_extensions(nv, arcs);
        CHECK(all.size() == brute);
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("worked enumerations") {
    FixtureOracle vertex(default_fixtures());
    const auto count = enumerate_covers(make_problem(1, 1, {7, -3, -1}, {1, 0, 0}), vertex);
    CHECK(count.size() == 5);
    CHECK(sorted_mults(count) == std::vector<Rational>{rat(-1, 24), rat(1, 2), 2, 3, rat(175, 24)});

    const auto chamber = enumerate_covers(make_problem(0, 1, {6, -1, -1, 1, -2}, {1, 0, 0, 0, 0}), vertex);
    CHECK(sorted_mults(chamber) == std::vector<Rational>{1, 1, 2, 3, 4, 4});

    const auto trivial = enumerate_covers(make_problem(0, 1, {3, -1, -1}), vertex);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].multiplicity == 1);
}

TEST_CASE("compute_H examples") {
    FixtureOracle vertex(default_fixtures());
    CHECK(compute_H(make_problem(1, 1, {7, -3, -1}, {1, 0, 0}), vertex) == rat(51, 4));
    CHECK(compute_H(make_problem(1, 1, {5, -3}), vertex) == rat(119, 24));
    CHECK(compute_H(make_problem(0, 2, {1, 1, 1, 1}), vertex) == 0);
    CHECK_THROWS_AS(compute_H(make_problem(1, 5, {15, -5}), vertex), MissingVertexData);
    CHECK_THROWS_AS(compute_H(make_problem(0, 1, {1, 1}), vertex), InvalidProblem);
}

TEST_CASE("top psi degree gives the single-vertex multinomial") {
    FixtureOracle vertex;
    CHECK(compute_H(make_problem(0, 1, {2, 1, -2, 1}, {1, 0, 0, 0}), vertex) == 1);
    CHECK(compute_H(make_problem(0, 2, {2, 1, -1, 1, 3, 2}, {1, 2, 0, 0, 0, 0}), vertex) == 3);
    CHECK(compute_H(make_problem(0, 0, {0, 0, 0, 0, 0}, {1, 1, 0, 0, 0}), vertex) == 2);
}

// Made-up but deterministic values for higher-genus vertices, so that
// multiplicity bookkeeping can be compared without real data.
class SyntheticOracle : public VertexOracle {
public:
    Rational vertex_mult(const VertexKey& key) const override {
        key.validate();
        if (key.genus == 0) {
            return genus0_vertex_mult(key.psi);
        }
        VertexKey c = key;
        c.canonicalize();
        std::int64_t h = 7 * c.genus + 3 * c.k;
        for (std::size_t i = 0; i < c.degrees.size(); ++i) {
            h = h * 31 + c.degrees[i] * 5 + c.psi[i];
        }
        return rat(h % 97, 1 + (h % 5 + 5) % 5);
    }
};

TEST_CASE("enumerator agrees with the sweep oracle") {
    SyntheticOracle vertex;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const int g = trial % 3 == 2 ? 1 : 0;
        const int n = g == 0 ? 3 + trial % 3 : 1 + trial % 3;
        const std::int64_t k = static_cast<std::int64_t>(trial % 5) - 2;
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        if (trial % 2 == 1 && 2 * g - 3 + n >= 1) {
            e[static_cast<std::size_t>(trial % n)] = 1;
        }
        const auto p = make_problem(g, k, random_profile(rng, n, k, g, 5), e);
        const auto covers = enumerate_covers(p, vertex);
        std::set<CoverGraph> mine;
        Rational h;
        for (const auto& wc : covers) {
            mine.insert(wc.cover);
            h += wc.multiplicity;
        }
        CHECK(mine.size() == covers.size());
        CHECK(mine == oracle::sweep_covers(p));
        CHECK(h == oracle::sweep_H(p, vertex));
    }
}

TEST_CASE("genus-2 enumeration matches the sweep oracle") {
    SyntheticOracle vertex;
    for (const auto& p : {make_problem(2, 0, {3, -3}), make_problem(2, 1, {3, 1}), make_problem(2, 1, {5, -1}, {1, 0}),
                          make_problem(2, -1, {-2, -1, -2}, {0, 2, 0})}) {
        std::set<CoverGraph> mine;
        Rational h;
        for (const auto& wc : enumerate_covers(p, vertex)) {
            mine.insert(wc.cover);
            h += wc.multiplicity;
        }
        CHECK(!mine.empty());
        CHECK(mine == oracle::sweep_covers(p));
        CHECK(h == oracle::sweep_H(p, vertex));
    }
}

TEST_CASE("outputs pass validation and recompute") {
    FixtureOracle vertex(oracle::with_turned_around(default_fixtures()));
    for (const auto& p : {make_problem(1, 1, {7, -3, -1}, {1, 0, 0}), make_problem(0, 2, {5, -1, 3, -2, 1}),
                          make_problem(1, -2, {-6, 2}), make_problem(0, 0, {2, -3, 1, 4, -4})}) {
        const auto covers = enumerate_covers(p, vertex);
        for (const auto& wc : covers) {
            CHECK_NOTHROW(check_cover(p, wc.cover));
            Rational m = wc.edge_product / Rational(static_cast<std::int64_t>(wc.aut));
            for (const auto& v : wc.vertex_mults) {
                m *= v;
            }
            CHECK(m == wc.multiplicity);
            CHECK(assemble_multiplicity(p, wc.cover, vertex).multiplicity == wc.multiplicity);
        }
        const auto again = enumerate_covers(p, vertex);
        REQUIRE(again.size() == covers.size());
        for (std::size_t i = 0; i < covers.size(); ++i) {
            CHECK(again[i].cover == covers[i].cover);
        }
    }
}

TEST_CASE("parallel enumeration is deterministic") {
    FixtureOracle vertex(default_fixtures());
    const auto p = make_problem(0, 1, {4, -2, 3, -1, 1, -1}, {1, 0, 0, 0, 0, 0});
    const auto serial = enumerate_covers(p, vertex, 1);
    const auto parallel = enumerate_covers(p, vertex, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].cover == parallel[i].cover);
        CHECK(serial[i].multiplicity == parallel[i].multiplicity);
    }
}

TEST_CASE("genus-0 multiplicities are nonnegative and turn around") {
    FixtureOracle vertex;
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 4;
        const std::int64_t k = static_cast<std::int64_t>(trial % 7) - 3;
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        if (n > 3 && trial % 2 == 0) {
            e[0] = 1;
        }
        const auto x = random_profile(rng, n, k, 0, 6);
        const auto p = make_problem(0, k, x, e);
        Rational h;
        for (const auto& wc : enumerate_covers(p, vertex)) {
            CHECK(wc.multiplicity.sign() >= 0);
            h += wc.multiplicity;
        }
        auto neg = x;
        for (auto& v : neg) {
            v = -v;
        }
        CHECK(compute_H(make_problem(0, -k, neg, e), vertex) == h);
    }
}

TEST_CASE("free weight bound") {
    const auto p = make_problem(1, 1, {7, -3, -1}, {1, 0, 0});
    CHECK(free_weight_bound(p, 1) == 11 + 3 * 2);
    CHECK(free_weight_bound(make_problem(1, 0, {2, -2}), 1) == 4);
}
