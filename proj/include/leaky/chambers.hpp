#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "leaky/enumerator.hpp"
#include "leaky/linform.hpp"
#include "leaky/poly.hpp"
#include "leaky/problem.hpp"

namespace leaky {

/// Hyperplane delta_I = sum_{i in I} x_i - k(|I| - 1) = 0 along which some
/// genus-0 edge weight vanishes. walls() lists the representative containing
/// marking 1; a Wall built by make_wall keeps the subset as given, which fixes
/// the positive side for wall crossing.
struct Wall {
    std::vector<int> subset;  // sorted, 1-based
    LinForm form;
};

class ChamberError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument unless 2 <= |I| <= n-2 with entries in 1..n.
Wall make_wall(int n, std::int64_t k, std::vector<int> subset);
std::vector<Wall> walls(int n, std::int64_t k);
/// Signs of every wall form at x, in walls() order.
std::vector<int> sign_vector(int n, std::int64_t k, const std::vector<std::int64_t>& x);

/// One genus-0 tree contributing at the reference point.
struct TreeContribution {
    CombinatorialType type;
    std::vector<LinForm> weights;  // positive at the reference point
    std::vector<Arc> arcs;         // edge orientations, left to right
    std::uint64_t extensions = 0;
    Rational vertex_factor{1};
    Poly polynomial;               // before hyperplane reduction
};

std::vector<TreeContribution> chamber_contributions(const Problem& p);

/// The polynomial equal to H_0 on the chamber of p.x, in normal form on the
/// degree hyperplane (x_n eliminated). Throws ChamberError when p.x lies on
/// a wall, Unsupported for g != 0.
Poly chamber_polynomial(const Problem& p);

struct FlankingPoints {
    std::vector<std::int64_t> plus;   // delta_I = +1
    std::vector<std::int64_t> minus;  // delta_I = -1
};

/// Integer points on either side of the wall, off every other wall. Only
/// n, k and e of `shape` are used.
FlankingPoints find_flanking_points(const Problem& shape, const Wall& wall);

/// P(plus) - P(minus) for chamber polynomials at explicit flanking points.
Poly wall_crossing(const Problem& shape, const Wall& wall, const std::vector<std::int64_t>& plus,
                   const std::vector<std::int64_t>& minus);
/// Same with flanking points from find_flanking_points.
Poly wall_crossing(const Problem& shape, const Wall& wall);

/// binom(r; r1, r2) * delta_I * P_I * P_{I^c} from the two cut subproblems.
Poly wall_crossing_formula(const Problem& shape, const Wall& wall);

enum class Vanishing { Zero, Positive };

/// Genus-0 vanishing criterion. Throws Unsupported for g != 0.
Vanishing classify(const Problem& p);

/// Up to `count` distinct integer points (degree constraint included) in the
/// chamber of p.x, searched in a box of the given radius around p.x.
std::vector<std::vector<std::int64_t>> sample_chamber_points(const Problem& p, int count, std::int64_t radius,
                                                            std::mt19937_64& rng);

}  // namespace leaky
