#include "leaky/intersections.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace leaky {

Rational psi_integral(int n, const std::vector<int>& e) {
    if (n < 3 || static_cast<int>(e.size()) != n) {
        return Rational(0);
    }
    std::vector<std::int64_t> parts(e.begin(), e.end());
    return Rational(multinomial(n - 3, parts));
}

namespace {

using Query = std::tuple<int, std::vector<int>, int>;

std::shared_mutex memo_mutex;
std::map<Query, Rational> memo;

Rational kappa_reduce(int n, std::vector<int> e, int f) {
    if (f < 0 || n < 3 || std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) {
        return Rational(0);
    }
    if (std::accumulate(e.begin(), e.end(), 0) + f != n - 3) {
        return Rational(0);
    }
    if (f == 0) {
        return psi_integral(n, e);
    }
    std::sort(e.begin(), e.end());
    Query key{n, e, f};
    {
        std::shared_lock lock(memo_mutex);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
    }
    Rational total;
    for (int j = 0; j < f; ++j) {
        auto grown = e;
        grown.push_back(j + 2);
        const Rational term = Rational(multinomial(f - 1, {j, f - 1 - j})) * kappa_reduce(n + 1, grown, f - 1 - j);
        total += (j % 2 == 0) ? term : -term;
    }
    std::unique_lock lock(memo_mutex);
    memo.emplace(std::move(key), total);
    return total;
}

void require_recursion_input(const Problem& p, int s, int f) {
    validate_problem(p);
    if (p.g != 0) {
        throw std::invalid_argument("the recursion is implemented in genus 0 only");
    }
    if (s < 1 || s > p.n) {
        throw std::invalid_argument("marking s out of range");
    }
    if (p.e[static_cast<std::size_t>(s) - 1] < 1) {
        throw std::invalid_argument("recursion needs e_s >= 1");
    }
    if (f < 0 || p.psi_total() + f != p.n - 3) {
        throw std::invalid_argument("recursion needs |e| + f = n - 3");
    }
}

}  // namespace

Rational psi_kappa_integral(int n, const std::vector<int>& e, int f) {
    if (static_cast<int>(e.size()) != n) {
        return Rational(0);
    }
    return kappa_reduce(n, e, f);
}

Rational recursion_lhs(const Problem& p, int s, int f) {
    require_recursion_input(p, s, f);
    return Rational(p.x[static_cast<std::size_t>(s) - 1] * p.euler()) * psi_kappa_integral(p.n, p.e, f);
}

Rational recursion_rhs(const Problem& p, int s, int f) {
    require_recursion_input(p, s, f);
    const int n = p.n;
    auto es = p.e;
    es[static_cast<std::size_t>(s) - 1] -= 1;
    Rational total = Rational(p.k) * psi_kappa_integral(n, es, f + 1);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> e0;
        std::vector<int> e1;
        std::int64_t delta = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                e0.push_back(es[static_cast<std::size_t>(i)]);
                delta += p.x[static_cast<std::size_t>(i)];
            } else {
                e1.push_back(es[static_cast<std::size_t>(i)]);
            }
        }
        const int n0 = static_cast<int>(e0.size());
        const int n1 = static_cast<int>(e1.size());
        if (n0 < 2 || n1 < 2) {
            continue;
        }
        delta -= p.k * (n0 - 1);
        if (delta <= 0) {
            continue;
        }
        const int f0 = n0 - 2 - std::accumulate(e0.begin(), e0.end(), 0);
        const int f1 = n1 - 2 - std::accumulate(e1.begin(), e1.end(), 0);
        if (f0 < 0 || f1 < 0) {
            continue;
        }
        const bool s_left = (mask & (1u << (s - 1))) != 0;
        const std::int64_t rho = s_left ? n1 - 1 : -(n0 - 1);
        e0.push_back(0);
        e1.push_back(0);
        total += Rational(rho * delta) * Rational(multinomial(f, {f0, f1})) * psi_kappa_integral(n0 + 1, e0, f0) *
                 psi_kappa_integral(n1 + 1, e1, f1);
    }
    return total;
}

}  // namespace leaky
