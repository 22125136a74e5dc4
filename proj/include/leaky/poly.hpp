#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leaky/linform.hpp"
#include "leaky/rational.hpp"

namespace leaky {

/// Sparse exponent vector: (variable index, exponent) pairs sorted by index,
/// exponents strictly positive. The empty monomial is 1.
using Monomial = std::vector<std::pair<int, int>>;

int monomial_degree(const Monomial& m);

/// Multivariate polynomial in x_1, x_2, ... with exact rational coefficients.
/// No zero coefficient is ever stored.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(std::int64_t c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly variable(int index);
    /// Affine form with the leak k substituted by a number.
    static Poly from_linform(const LinForm& f, std::int64_t k);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const;
    int max_variable() const;
    Rational coefficient(const Monomial& m) const;

    Rational eval(std::span<const Rational> x) const;
    Rational eval(std::span<const std::int64_t> x) const;

    /// Replaces x_var by `value` everywhere.
    Poly substitute(int var, const Poly& value) const;
    /// Simultaneous substitution; variables absent from the map are kept.
    Poly substitute(const std::map<int, Poly>& values) const;

    /// Normal form on the degree hyperplane  x_1 + ... + x_n = k(2g-2+n):
    /// eliminates x_n.
    Poly restrict_to_degree_hyperplane(int n, std::int64_t k, int g) const;

    /// Expanded form, terms by descending degree: "2*x1*x2^2-1/2*x3+5".
    std::string str() const;
    /// Positive rational content pulled out when it is not 1: "2*(x1+x2+x3-2)".
    std::string factored_str() const;
    /// Positive c such that p/c has coprime integer coefficients.
    Rational content() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Term order used by str(): higher total degree first, then by monomial.
    std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);

}  // namespace leaky
