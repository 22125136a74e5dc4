#include "leaky/problem.hpp"

#include <numeric>

namespace leaky {

int Problem::psi_total() const { return std::accumulate(e.begin(), e.end(), 0); }

Problem make_problem(int g, std::int64_t k, std::vector<std::int64_t> x, std::vector<int> e) {
    Problem p;
    p.g = g;
    p.k = k;
    p.n = static_cast<int>(x.size());
    p.x = std::move(x);
    p.e = e.empty() ? std::vector<int>(p.x.size(), 0) : std::move(e);
    return p;
}

void validate_problem(const Problem& p) {
    if (p.g < 0) {
        throw InvalidProblem(ProblemDefect::NegativeGenus, "genus must be nonnegative");
    }
    if (static_cast<int>(p.x.size()) != p.n || static_cast<int>(p.e.size()) != p.n) {
        throw InvalidProblem(ProblemDefect::LengthMismatch,
                             "x and e must both have length n = " + std::to_string(p.n));
    }
    if (p.euler() <= 0) {
        throw InvalidProblem(ProblemDefect::Unstable, "2g-2+n = " + std::to_string(p.euler()) + " must be positive");
    }
    const std::int64_t degree = std::accumulate(p.x.begin(), p.x.end(), std::int64_t{0});
    if (degree != p.k * p.euler()) {
        throw InvalidProblem(ProblemDefect::DegreeMismatch,
                             "sum of x is " + std::to_string(degree) + " but k(2g-2+n) = " +
                                 std::to_string(p.k * p.euler()));
    }
    for (int i = 0; i < p.n; ++i) {
        if (p.e[static_cast<std::size_t>(i)] < 0) {
            throw InvalidProblem(ProblemDefect::NegativePsi, "psi exponent e" + std::to_string(i + 1) + " is negative");
        }
    }
    const int bound = 2 * p.g - 3 + p.n;
    if (p.psi_total() > bound) {
        throw InvalidProblem(ProblemDefect::PsiOutOfRange, "|e| = " + std::to_string(p.psi_total()) +
                                                               " exceeds 2g-3+n = " + std::to_string(bound));
    }
}

}  // namespace leaky
