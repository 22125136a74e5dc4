#include "leaky/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace leaky {

namespace {

mpz_class parse_integer(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("malformed integer literal: " + std::string(text));
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(std::int64_t value) {
    // mpq_class has no int64 constructor on every platform; go through mpz.
    value_ = mpq_class(mpz_class(std::to_string(value), 10));
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= o.value_;
    return *this;
}

Rational rat(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("rat: zero denominator");
    }
    return Rational(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class multinomial(std::int64_t n, const std::vector<std::int64_t>& parts) {
    std::int64_t total = 0;
    for (auto p : parts) {
        if (p < 0) {
            return 0;
        }
        total += p;
    }
    if (n < 0 || total != n) {
        return 0;
    }
    mpz_class r = factorial(static_cast<unsigned>(n));
    for (auto p : parts) {
        r /= factorial(static_cast<unsigned>(p));
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace leaky
