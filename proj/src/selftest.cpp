#include "leaky/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "leaky/chambers.hpp"
#include "leaky/enumerator.hpp"
#include "leaky/intersections.hpp"

namespace leaky {

namespace {

using Check = std::function<std::string()>;  // empty string on success

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

std::string golden_count(const VertexOracle& oracle, int jobs) {
    const auto p = make_problem(1, 1, {7, -3, -1}, {1, 0, 0});
    std::vector<Rational> mults;
    Rational total;
    for (const auto& wc : enumerate_covers(p, oracle, jobs)) {
        mults.push_back(wc.multiplicity);
        total += wc.multiplicity;
    }
    std::sort(mults.begin(), mults.end());
    std::vector<Rational> want{rat(-1, 24), rat(1, 2), 2, 3, rat(175, 24)};
    return expect(total == rat(51, 4) && mults == want, "H = " + total.str());
}

std::string genus1_family(const VertexOracle& oracle, int jobs) {
    for (std::int64_t k = 1; k <= 2; ++k) {
        for (std::int64_t a = 2; a <= 6; ++a) {
            const std::int64_t d = a + k;
            const Rational h = compute_H(make_problem(1, k, {d, -(d - 2 * k)}), oracle, jobs);
            const Rational want = rat(a * (a - 1) * (a + 1), 12) - rat(k, 24);
            if (h != want) {
                return "d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " + h.str();
            }
        }
    }
    return {};
}

std::string classifier_grid(const VertexOracle& oracle, int jobs) {
    for (std::int64_t k = 1; k <= 2; ++k) {
        for (int n = 3; n <= 5; ++n) {
            const std::int64_t total = k * (n - 2);
            std::vector<std::int64_t> x(static_cast<std::size_t>(n), 1);
            std::function<std::string(int, std::int64_t)> rec = [&](int i, std::int64_t left) -> std::string {
                if (i == n - 1) {
                    if (left < 1 || left > 3 * k) {
                        return {};
                    }
                    x[static_cast<std::size_t>(i)] = left;
                    for (unsigned code = 0; code < (1u << n); ++code) {
                        std::vector<int> e(static_cast<std::size_t>(n));
                        for (int j = 0; j < n; ++j) {
                            e[static_cast<std::size_t>(j)] = (code >> j) & 1;
                        }
                        const auto p = make_problem(0, k, x, e);
                        if (p.psi_total() > n - 3) {
                            continue;
                        }
                        const bool zero = compute_H(p, oracle, jobs).is_zero();
                        if (zero != (classify(p) == Vanishing::Zero)) {
                            return "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
                        }
                    }
                    return {};
                }
                for (std::int64_t v = 1; v <= std::min<std::int64_t>(3 * k, left); ++v) {
                    x[static_cast<std::size_t>(i)] = v;
                    if (auto err = rec(i + 1, left - v); !err.empty()) {
                        return err;
                    }
                }
                return {};
            };
            if (auto err = rec(0, total); !err.empty()) {
                return err;
            }
        }
    }
    return {};
}

std::string recursion_sample() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-6, 6);
    for (int n = 4; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::int64_t> x(static_cast<std::size_t>(n));
            for (auto& v : x) {
                v = dist(rng);
            }
            const std::int64_t k = trial % 3;
            std::int64_t sum = 0;
            for (int i = 0; i + 1 < n; ++i) {
                sum += x[static_cast<std::size_t>(i)];
            }
            x.back() = k * (n - 2) - sum;
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[0] = 1;
            const auto p = make_problem(0, k, x, e);
            const int f = n - 3 - 1;
            if (recursion_lhs(p, 1, f) != recursion_rhs(p, 1, f)) {
                return "identity fails at n=" + std::to_string(n);
            }
        }
    }
    return {};
}

std::string symmetry_sample(const VertexOracle& oracle, int jobs) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + trial % 3;
        const std::int64_t k = 1 + trial % 2;
        std::vector<std::int64_t> x(static_cast<std::size_t>(n));
        std::int64_t sum = 0;
        for (int i = 0; i + 1 < n; ++i) {
            x[static_cast<std::size_t>(i)] = dist(rng);
            sum += x[static_cast<std::size_t>(i)];
        }
        x.back() = k * (n - 2) - sum;
        auto neg = x;
        for (auto& v : neg) {
            v = -v;
        }
        const Rational a = compute_H(make_problem(0, k, x), oracle, jobs);
        const Rational b = compute_H(make_problem(0, -k, neg), oracle, jobs);
        if (a != b || a.sign() < 0) {
            return "turn-around mismatch: " + a.str() + " vs " + b.str();
        }
    }
    return {};
}

}  // namespace

std::vector<SelfTestResult> run_selftest(const VertexOracle& oracle, int jobs) {
    const std::vector<std::pair<std::string, Check>> checks{
        {"golden genus-1 count", [&] { return golden_count(oracle, jobs); }},
        {"chamber polynomial",
         [] {
             const Poly p = chamber_polynomial(make_problem(0, 1, {6, -1, -1, 1, -2}, {1, 0, 0, 0, 0}));
             return expect(p.str() == "3*x1-3", p.str());
         }},
        {"wall crossing",
         [] {
             const auto shape = make_problem(0, 1, {6, -1, -1, 1, -2}, {1, 0, 0, 0, 0});
             const auto w = make_wall(5, 1, {1, 2, 3});
             const Poly a = wall_crossing(shape, w);
             const Poly b = wall_crossing_formula(shape, w);
             return expect(a == b && a.factored_str() == "2*(x1+x2+x3-2)", a.factored_str());
         }},
        {"genus-1 family", [&] { return genus1_family(oracle, jobs); }},
        {"vanishing classifier", [&] { return classifier_grid(oracle, jobs); }},
        {"descendant recursion", [] { return recursion_sample(); }},
        {"psi integrals",
         [] {
             for (int n = 3; n <= 7; ++n) {
                 std::vector<int> e(static_cast<std::size_t>(n), 0);
                 e[0] = n - 3;
                 if (psi_kappa_integral(n, e, 0) != psi_integral(n, e) || psi_integral(n, e) != Rational(1)) {
                     return std::string("mismatch at n=") + std::to_string(n);
                 }
             }
             return expect(psi_kappa_integral(5, {0, 0, 0, 0, 0}, 2) == Rational(5), "kappa^2 on M_0,5");
         }},
        {"turn-around symmetry", [&] { return symmetry_sample(oracle, jobs); }},
    };
    std::vector<SelfTestResult> out;
    for (const auto& [name, check] : checks) {
        SelfTestResult r{name, false, {}};
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception& err) {
            r.detail = err.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace leaky
