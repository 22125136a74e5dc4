#include <random>

#include "doctest.h"
#include "leaky/linform.hpp"
#include "leaky/poly.hpp"
#include "leaky/rational.hpp"

using leaky::LinForm;
using leaky::Poly;
using leaky::Rational;
using leaky::rat;

TEST_CASE("rat reduces and normalizes sign") {
    CHECK(rat(6, -4).str() == "-3/2");
    CHECK(rat(0, 7).str() == "0");
    CHECK(rat(0, 7).den() == 1);
    CHECK(rat(175, 24).str() == "175/24");
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational string round trip") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
    std::uniform_int_distribution<std::int64_t> den(1, 5000);
    for (int i = 0; i < 500; ++i) {
        const Rational r = rat(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("-1/24") == rat(-1, 24));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("multinomials") {
    CHECK(leaky::multinomial(3, {1, 1, 1}) == 6);
    CHECK(leaky::multinomial(2, {1, 1}) == 2);
    CHECK(leaky::multinomial(3, {2, 2}) == 0);
    CHECK(leaky::multinomial(1, {-1, 2}) == 0);
    CHECK(leaky::factorial(10) == 3628800);
}

TEST_CASE("linform evaluation") {
    const std::vector<std::int64_t> x{6, -1, -1, 1, -2};
    const LinForm f = LinForm::parse("x1+x2+x3-2k");
    CHECK(f.eval(x, 1) == 2);
    CHECK(LinForm().eval(x, 5) == 0);
    CHECK(LinForm::parse("x1-k").eval(std::vector<std::int64_t>{3, -1, -1}, 1) == 2);
    CHECK_THROWS_AS(LinForm::variable(6).eval(x, 1), std::out_of_range);
    CHECK(f.str() == "x1+x2+x3-2k");
    CHECK(f.str(1) == "x1+x2+x3-2");
    CHECK((f - f).is_zero());
    CHECK(LinForm::parse("-2x1+3k-5") == LinForm::variable(1) * -2 + LinForm::leak() * 3 + LinForm::constant(-5));
}

TEST_CASE("hyperplane normal form") {
    Poly p = Poly(-12);
    p += Poly::variable(1) * Poly(6);
    for (int i = 2; i <= 5; ++i) {
        p += Poly::variable(i) * Poly(3);
    }
    CHECK(p.restrict_to_degree_hyperplane(5, 1, 0).str() == "3*x1-3");
    CHECK((p - p).is_zero());
    CHECK((Poly::variable(1) * Poly::variable(2) - Poly(5)).total_degree() == 2);
    CHECK(Poly().total_degree() == -1);
}

TEST_CASE("factored printing") {
    const Poly p = Poly::from_linform(LinForm::parse("2x1+2x2+2x3-4k"), 1);
    CHECK(p.factored_str() == "2*(x1+x2+x3-2)");
    CHECK(p.str() == "2*x1+2*x2+2*x3-4");
    CHECK(Poly(rat(-1, 24)).str() == "-1/24");
}

namespace {

Poly random_poly(std::mt19937_64& rng, int vars) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> var(1, vars);
    std::uniform_int_distribution<int> terms(0, 4);
    Poly p;
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        Poly term(rat(coeff(rng), 1 + std::abs(coeff(rng))));
        const int deg = std::abs(coeff(rng)) % 3;
        for (int d = 0; d < deg; ++d) {
            term *= Poly::variable(var(rng));
        }
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial ring axioms") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_poly(rng, 3);
        const Poly b = random_poly(rng, 3);
        const Poly c = random_poly(rng, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("eval after hyperplane reduction agrees on the hyperplane") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> dist(-7, 7);
    for (int i = 0; i < 200; ++i) {
        const int n = 4;
        const std::int64_t k = i % 3;
        const int g = i % 2;
        const Poly p = random_poly(rng, n);
        std::vector<std::int64_t> x(n);
        std::int64_t sum = 0;
        for (int j = 0; j + 1 < n; ++j) {
            x[static_cast<std::size_t>(j)] = dist(rng);
            sum += x[static_cast<std::size_t>(j)];
        }
        x[n - 1] = k * (2 * g - 2 + n) - sum;
        const Poly r = p.restrict_to_degree_hyperplane(n, k, g);
        CHECK(r.max_variable() < n);
        CHECK(r.eval(x) == p.eval(x));
    }
}

TEST_CASE("substitution") {
    const Poly x1 = Poly::variable(1);
    const Poly x2 = Poly::variable(2);
    const Poly p = x1 * x1 + x2;
    CHECK(p.substitute(1, x2 + Poly(1)) == x2 * x2 + x2 * Poly(3) + Poly(1));
    const Poly swapped = p.substitute(std::map<int, Poly>{{1, x2}, {2, x1}});
    CHECK(swapped == x2 * x2 + x1);
}
