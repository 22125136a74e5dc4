#include "leaky/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace leaky {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) {
        d += e;
    }
    return d;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) {
        terms_.emplace(Monomial{}, c);
    }
}

Poly Poly::variable(int index) {
    if (index < 1) {
        throw std::out_of_range("Poly: variable index must be >= 1");
    }
    Poly p;
    p.terms_.emplace(Monomial{{index, 1}}, Rational(1));
    return p;
}

Poly Poly::from_linform(const LinForm& f, std::int64_t k) {
    Poly p(f.constant_term() + f.k_coeff() * k);
    for (const auto& [i, c] : f.coeffs()) {
        p.add_term(Monomial{{i, 1}}, Rational(c));
    }
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, monomial_degree(m));
    }
    return d;
}

int Poly::max_variable() const {
    int v = 0;
    for (const auto& [m, c] : terms_) {
        if (!m.empty()) {
            v = std::max(v, m.back().first);
        }
    }
    return v;
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::eval(std::span<const Rational> x) const {
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            if (static_cast<std::size_t>(v) > x.size()) {
                throw std::out_of_range("Poly::eval: x" + std::to_string(v) + " missing");
            }
            for (int r = 0; r < e; ++r) {
                t *= x[static_cast<std::size_t>(v) - 1];
            }
        }
        total += t;
    }
    return total;
}

Rational Poly::eval(std::span<const std::int64_t> x) const {
    std::vector<Rational> rx(x.begin(), x.end());
    return eval(std::span<const Rational>(rx));
}

Poly Poly::substitute(int var, const Poly& value) const { return substitute(std::map<int, Poly>{{var, value}}); }

Poly Poly::substitute(const std::map<int, Poly>& values) const {
    // Cache powers per substituted variable.
    std::map<std::pair<int, int>, Poly> powers;
    auto power = [&](int var, int e) -> const Poly& {
        auto key = std::make_pair(var, e);
        auto it = powers.find(key);
        if (it != powers.end()) {
            return it->second;
        }
        Poly p(1);
        for (int r = 0; r < e; ++r) {
            p *= values.at(var);
        }
        return powers.emplace(key, std::move(p)).first->second;
    };

    Poly out;
    for (const auto& [m, c] : terms_) {
        Monomial kept;
        Poly factor(c);
        for (const auto& [v, e] : m) {
            if (values.count(v) != 0) {
                factor *= power(v, e);
            } else {
                kept.emplace_back(v, e);
            }
        }
        for (const auto& [fm, fc] : factor.terms_) {
            out.add_term(monomial_product(kept, fm), fc);
        }
    }
    return out;
}

Poly Poly::restrict_to_degree_hyperplane(int n, std::int64_t k, int g) const {
    if (n < 1) {
        throw std::invalid_argument("restrict_to_degree_hyperplane: n must be positive");
    }
    Poly last(k * (2 * g - 2 + n));
    for (int i = 1; i < n; ++i) {
        last -= variable(i);
    }
    return substitute(n, last);
}

std::vector<std::pair<Monomial, Rational>> Poly::sorted_terms() const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int da = monomial_degree(a.first);
        const int db = monomial_degree(b.first);
        if (da != db) {
            return da > db;
        }
        // Within a degree, x1 before x2: compare the dense exponent vectors
        // lexicographically with larger exponents first.
        const auto& ma = a.first;
        const auto& mb = b.first;
        std::size_t i = 0;
        while (i < ma.size() && i < mb.size()) {
            if (ma[i].first != mb[i].first) {
                return ma[i].first < mb[i].first;
            }
            if (ma[i].second != mb[i].second) {
                return ma[i].second > mb[i].second;
            }
            ++i;
        }
        return ma.size() > mb.size();
    });
    return out;
}

namespace {

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) {
            s += '*';
        }
        s += "x" + std::to_string(v);
        if (e != 1) {
            s += "^" + std::to_string(e);
        }
    }
    return s;
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : sorted_terms()) {
        const bool negative = c.sign() < 0;
        const Rational a = negative ? -c : c;
        if (negative) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (m.empty()) {
            out += a.str();
        } else if (a == Rational(1)) {
            out += monomial_str(m);
        } else {
            out += a.str() + "*" + monomial_str(m);
        }
    }
    return out;
}

Rational Poly::content() const {
    if (terms_.empty()) {
        return Rational(1);
    }
    mpz_class g_num = 0;
    mpz_class l_den = 1;
    for (const auto& [m, c] : terms_) {
        mpz_class num = abs(c.num());
        mpz_gcd(g_num.get_mpz_t(), g_num.get_mpz_t(), num.get_mpz_t());
        mpz_class den = c.den();
        mpz_lcm(l_den.get_mpz_t(), l_den.get_mpz_t(), den.get_mpz_t());
    }
    return Rational(g_num, l_den);
}

std::string Poly::factored_str() const {
    if (terms_.empty()) {
        return "0";
    }
    const Rational c = content();
    if (c == Rational(1) || terms_.size() == 1) {
        return str();
    }
    Poly primitive;
    for (const auto& [m, coef] : terms_) {
        primitive.terms_.emplace(m, coef / c);
    }
    return c.str() + "*(" + primitive.str() + ")";
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.terms_) {
        c = -c;
    }
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(monomial_product(ma, mb), ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

}  // namespace leaky
