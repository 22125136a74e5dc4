#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace leaky {

/// One counting problem: genus g, n markings with signed profile x (positive
/// entries are left ends, negative ones right ends) and psi-exponents e.
struct Problem {
    int g = 0;
    int n = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> x;
    std::vector<int> e;

    int euler() const { return 2 * g - 2 + n; }
    int psi_total() const;
    /// Number of branch conditions c = 2g-3+n-|e|; covers have c+1 vertices.
    int branch_count() const { return 2 * g - 3 + n - psi_total(); }
    int vertex_count() const { return branch_count() + 1; }
};

/// Builds a problem with n taken from x; e defaults to all zeros.
Problem make_problem(int g, std::int64_t k, std::vector<std::int64_t> x, std::vector<int> e = {});

enum class ProblemDefect {
    NegativeGenus,
    LengthMismatch,
    Unstable,
    DegreeMismatch,
    NegativePsi,
    PsiOutOfRange,
};

class InvalidProblem : public std::invalid_argument {
public:
    InvalidProblem(ProblemDefect defect, const std::string& what) : std::invalid_argument(what), defect_(defect) {}
    ProblemDefect defect() const { return defect_; }

private:
    ProblemDefect defect_;
};

/// Throws InvalidProblem naming the first violated constraint.
void validate_problem(const Problem& p);

}  // namespace leaky
