#include <algorithm>

#include "doctest.h"
#include "leaky/cover.hpp"
#include "leaky/enumerator.hpp"
#include "leaky/json_io.hpp"
#include "oracles.hpp"

using namespace leaky;

namespace {

CoverEdge edge(int a, int b, std::int64_t w) { return {a, b, EdgeWeight{w}}; }

const Problem kCount = make_problem(1, 1, {7, -3, -1}, {1, 0, 0});

CoverGraph pi1() { return {{{0, {1, 3}}, {0, {2}}}, {edge(0, 1, 2), edge(0, 1, 2)}, {0, 1}}; }
CoverGraph pi2() { return {{{0, {1, 3}}, {0, {2}}}, {edge(0, 1, 1), edge(0, 1, 3)}, {0, 1}}; }
CoverGraph pi3() { return {{{1, {1}}, {0, {2, 3}}}, {edge(0, 1, 5)}, {0, 1}}; }
CoverGraph pi4() { return {{{0, {1, 2}}, {0, {3}}}, {edge(0, 1, 1), edge(0, 1, 1)}, {0, 1}}; }
CoverGraph pi5() { return {{{0, {1, 2, 3}}, {1, {}}}, {edge(0, 1, 1)}, {0, 1}}; }

}  // namespace

TEST_CASE("problem validation") {
    CHECK_NOTHROW(validate_problem(kCount));
    try {
        validate_problem(make_problem(0, 1, {7, -3, -1}));
        FAIL("expected a degree error");
    } catch (const InvalidProblem& err) {
        CHECK(err.defect() == ProblemDefect::DegreeMismatch);
    }
    try {
        validate_problem(make_problem(0, 1, {3, -1, -1}, {1, 0, 0}));
        FAIL("expected a psi bound error");
    } catch (const InvalidProblem& err) {
        CHECK(err.defect() == ProblemDefect::PsiOutOfRange);
    }
    try {
        validate_problem(make_problem(0, 1, {1, 0}));
        FAIL("expected an instability error");
    } catch (const InvalidProblem& err) {
        CHECK(err.defect() == ProblemDefect::Unstable);
    }
    try {
        validate_problem(make_problem(0, 0, {0, 0, 0, 0}, {-1, 0, 0, 0}));
        FAIL("expected a negative psi error");
    } catch (const InvalidProblem& err) {
        CHECK(err.defect() == ProblemDefect::NegativePsi);
    }
    Problem bad = kCount;
    bad.e.pop_back();
    CHECK_THROWS_AS(validate_problem(bad), InvalidProblem);
}

TEST_CASE("check_cover accepts the worked covers") {
    for (const auto& c : {pi1(), pi2(), pi3(), pi4(), pi5()}) {
        CHECK_NOTHROW(check_cover(kCount, c));
    }
    const CoverGraph single{{{0, {1, 2, 3}}}, {}, {0}};
    CHECK_NOTHROW(check_cover(make_problem(0, 1, {3, -1, -1}), single));
}

TEST_CASE("check_cover names the violation") {
    auto c = pi3();
    c.edges[0].weight = std::int64_t{4};
    CHECK_THROWS_WITH_AS(check_cover(kCount, c), doctest::Contains("leaky balance"), InvalidCover);

    auto backwards = pi3();
    backwards.order = {1, 0};
    CHECK_THROWS_WITH_AS(check_cover(kCount, backwards), doctest::Contains("right to left"), InvalidCover);

    auto missing = pi3();
    missing.vertices[1].ends = {2};
    CHECK_THROWS_WITH_AS(check_cover(kCount, missing), doctest::Contains("end 3"), InvalidCover);

    auto psi = pi3();
    psi.vertices[0].genus = 0;
    CHECK_THROWS_AS(check_cover(kCount, psi), InvalidCover);
}

TEST_CASE("symbolic edge weights are evaluated at the profile") {
    const Problem p = make_problem(0, 1, {4, -1, 1, -2});
    CoverGraph c{{{0, {1, 3}}, {0, {2, 4}}}, {{0, 1, EdgeWeight{LinForm::parse("x1+x3-k")}}}, {0, 1}};
    CHECK_NOTHROW(check_cover(p, c));
    CHECK(assemble_multiplicity(p, c, FixtureOracle()).multiplicity == Rational(4));
}

TEST_CASE("automorphisms of the worked covers") {
    CHECK(automorphism_order(pi1()) == 2);
    CHECK(automorphism_order(pi2()) == 1);
    CHECK(automorphism_order(pi4()) == 2);
    CHECK(automorphism_order(pi3()) == 1);
    for (const auto& c : {pi1(), pi2(), pi3(), pi4(), pi5()}) {
        CHECK(automorphism_order(c) == oracle::brute_automorphisms(c));
    }
}

TEST_CASE("automorphisms agree with brute force on enumerated covers") {
    FixtureOracle vertex(default_fixtures());
    for (const auto& p : {make_problem(1, 1, {7, -3, -1}), make_problem(1, 2, {6, -2, -2}),
                          make_problem(2, 1, {3, 1}), make_problem(1, 0, {3, -1, 2, -4})}) {
        for (const auto& c : oracle::sweep_covers(p)) {
            CHECK(automorphism_order(c) == oracle::brute_automorphisms(c));
        }
    }
}

TEST_CASE("multiplicity assembly") {
    FixtureOracle vertex(default_fixtures());
    const auto w3 = assemble_multiplicity(kCount, pi3(), vertex);
    CHECK(w3.multiplicity == rat(175, 24));
    CHECK(w3.vertex_mults == std::vector<Rational>{rat(35, 24), 1});
    CHECK(assemble_multiplicity(kCount, pi5(), vertex).multiplicity == rat(-1, 24));
    CHECK(assemble_multiplicity(kCount, pi1(), vertex).multiplicity == 2);
    CHECK(assemble_multiplicity(kCount, pi4(), vertex).multiplicity == rat(1, 2));
    const CoverGraph single{{{0, {1, 2, 3}}}, {}, {0}};
    CHECK(assemble_multiplicity(make_problem(0, 1, {3, -1, -1}), single, vertex).multiplicity == 1);
    CHECK_THROWS_AS(assemble_multiplicity(kCount, pi3(), FixtureOracle()), MissingVertexData);
}

TEST_CASE("vertex and edge count identities") {
    FixtureOracle vertex(oracle::with_turned_around(default_fixtures()));
    for (const auto& p : {kCount, make_problem(0, 1, {6, -1, -1, 1, -2}, {1, 0, 0, 0, 0}),
                          make_problem(0, 2, {5, -1, 3, -2, 1}), make_problem(1, 2, {5, -1})}) {
        for (const auto& wc : enumerate_covers(p, vertex)) {
            const auto& c = wc.cover;
            CHECK(static_cast<int>(c.vertices.size()) == 2 * p.g + p.n - 2 - p.psi_total());
            CHECK(static_cast<int>(c.edges.size()) == p.branch_count() + c.first_betti());
        }
    }
}

TEST_CASE("positional normal form") {
    CoverGraph c{{{0, {2, 3}}, {1, {1}}}, {edge(1, 0, 5)}, {1, 0}};
    const auto norm = normalize_positions(c);
    CHECK(norm == pi3());
    CHECK(normalize_positions(norm) == norm);
}

TEST_CASE("cover JSON round trip") {
    for (const auto& c : {pi1(), pi3(), pi5()}) {
        const auto j = to_json(c);
        CHECK(cover_from_json(j) == c);
        CHECK(cover_from_json(Json::parse(j.dump())) == c);
    }
    const auto j = to_json(pi3());
    CHECK(j.dump() ==
          R"({"vertices":[{"genus":1,"ends":[1]},{"genus":0,"ends":[2,3]}],"edges":[{"from":0,"to":1,"weight":5}],"order":[0,1]})");
    CoverGraph sym{{{0, {1, 3}}, {0, {2, 4}}}, {{0, 1, EdgeWeight{LinForm::parse("x1+x3-k")}}}, {0, 1}};
    CHECK(cover_from_json(to_json(sym)) == sym);
    CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"vertices":[]})")), std::invalid_argument);
}
