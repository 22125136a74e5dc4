#include "leaky/chambers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "leaky/vertex_oracle.hpp"

namespace leaky {

Wall make_wall(int n, std::int64_t /*k*/, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
        throw std::invalid_argument("wall subset has repeated entries");
    }
    for (int i : subset) {
        if (i < 1 || i > n) {
            throw std::invalid_argument("wall subset entry " + std::to_string(i) + " outside 1.." + std::to_string(n));
        }
    }
    const int size = static_cast<int>(subset.size());
    if (size < 2 || size > n - 2) {
        throw std::invalid_argument("wall subset size must lie in 2..n-2");
    }
    Wall w;
    for (int i : subset) {
        w.form.add_variable(i, 1);
    }
    w.form.add_leak(-(size - 1));
    w.subset = std::move(subset);
    return w;
}

std::vector<Wall> walls(int n, std::int64_t k) {
    std::vector<Wall> out;
    if (n < 4) {
        return out;
    }
    // Subsets containing 1, listed in lexicographic order.
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> s{1};
        for (int i = 2; i <= n; ++i) {
            if (mask & (1u << (i - 2))) {
                s.push_back(i);
            }
        }
        const int size = static_cast<int>(s.size());
        if (size >= 2 && size <= n - 2) {
            subsets.push_back(std::move(s));
        }
    }
    std::sort(subsets.begin(), subsets.end());
    for (auto& s : subsets) {
        out.push_back(make_wall(n, k, std::move(s)));
    }
    return out;
}

std::vector<int> sign_vector(int n, std::int64_t k, const std::vector<std::int64_t>& x) {
    std::vector<int> out;
    for (const auto& w : walls(n, k)) {
        const auto v = w.form.eval(x, k);
        out.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
    }
    return out;
}

namespace {

void require_genus0(const Problem& p) {
    if (p.g != 0) {
        throw Unsupported("only genus 0 is supported here");
    }
}

std::string subset_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << s[i];
    }
    os << "}";
    return os.str();
}

void require_off_walls(const Problem& p) {
    std::vector<std::string> hit;
    for (const auto& w : walls(p.n, p.k)) {
        if (w.form.eval(p.x, p.k) == 0) {
            hit.push_back(subset_str(w.subset));
        }
    }
    if (!hit.empty()) {
        std::string msg = "reference point lies on walls";
        for (const auto& h : hit) {
            msg += " " + h;
        }
        throw ChamberError(msg);
    }
}

}  // namespace

std::vector<TreeContribution> chamber_contributions(const Problem& p) {
    validate_problem(p);
    require_genus0(p);
    require_off_walls(p);
    std::vector<TreeContribution> out;
    for (const auto& t : enumerate_types(p)) {
        TreeContribution tc;
        tc.type = t;
        tc.polynomial = Poly(1);
        const auto forms = solve_weights_tree(p, t);
        for (std::size_t i = 0; i < forms.size(); ++i) {
            const auto value = forms[i].eval(p.x, p.k);
            if (value == 0) {
                throw ChamberError("edge weight vanishes at the reference point");
            }
            const auto [a, b] = t.edges[i];
            tc.arcs.push_back(value > 0 ? Arc{a, b} : Arc{b, a});
            tc.weights.push_back(value > 0 ? forms[i] : -forms[i]);
            tc.polynomial *= Poly::from_linform(tc.weights.back(), p.k);
        }
        const int nv = static_cast<int>(t.vertices.size());
        tc.extensions = count_linear_extensions(nv, tc.arcs);
        for (int v = 0; v < nv; ++v) {
            std::vector<int> psi;
            for (int i : t.vertices[static_cast<std::size_t>(v)].ends) {
                psi.push_back(p.e[static_cast<std::size_t>(i) - 1]);
            }
            psi.insert(psi.end(), static_cast<std::size_t>(t.edge_degree(v)), 0);
            tc.vertex_factor *= genus0_vertex_mult(psi);
        }
        tc.polynomial *= Poly(tc.vertex_factor * Rational(static_cast<std::int64_t>(tc.extensions)));
        out.push_back(std::move(tc));
    }
    return out;
}

Poly chamber_polynomial(const Problem& p) {
    Poly total;
    for (const auto& tc : chamber_contributions(p)) {
        total += tc.polynomial;
    }
    return total.restrict_to_degree_hyperplane(p.n, p.k, 0);
}

FlankingPoints find_flanking_points(const Problem& shape, const Wall& wall) {
    const int n = shape.n;
    const std::int64_t k = shape.k;
    std::vector<bool> in_wall(static_cast<std::size_t>(n) + 1, false);
    for (int i : wall.subset) {
        in_wall[static_cast<std::size_t>(i)] = true;
    }
    int i0 = wall.subset.front();
    int j0 = 1;
    while (in_wall[static_cast<std::size_t>(j0)]) {
        ++j0;
    }
    const auto all = walls(n, k);
    std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(n));
    for (int attempt = 0; attempt < 20000; ++attempt) {
        const std::int64_t radius = 3 + n + std::llabs(k) + attempt / 200;
        std::uniform_int_distribution<std::int64_t> dist(-radius, radius);
        std::vector<std::int64_t> y(static_cast<std::size_t>(n));
        for (auto& v : y) {
            v = dist(rng);
        }
        std::int64_t side = 0;
        for (int i : wall.subset) {
            if (i != i0) {
                side += y[static_cast<std::size_t>(i) - 1];
            }
        }
        y[static_cast<std::size_t>(i0) - 1] = k * (static_cast<std::int64_t>(wall.subset.size()) - 1) - side;
        std::int64_t rest = 0;
        for (int i = 1; i <= n; ++i) {
            if (i != j0) {
                rest += y[static_cast<std::size_t>(i) - 1];
            }
        }
        y[static_cast<std::size_t>(j0) - 1] = k * (n - 2) - rest;
        bool generic = true;
        for (const auto& w : all) {
            std::vector<int> comp;
            for (int i = 1; i <= n; ++i) {
                if (!in_wall[static_cast<std::size_t>(i)]) {
                    comp.push_back(i);
                }
            }
            if (w.subset == wall.subset || w.subset == comp) {
                continue;
            }
            if (std::llabs(w.form.eval(y, k)) < 2) {
                generic = false;
                break;
            }
        }
        if (!generic) {
            continue;
        }
        FlankingPoints fp{y, y};
        fp.plus[static_cast<std::size_t>(i0) - 1] += 1;
        fp.plus[static_cast<std::size_t>(j0) - 1] -= 1;
        fp.minus[static_cast<std::size_t>(i0) - 1] -= 1;
        fp.minus[static_cast<std::size_t>(j0) - 1] += 1;
        return fp;
    }
    throw ChamberError("no generic point found on wall " + subset_str(wall.subset));
}

Poly wall_crossing(const Problem& shape, const Wall& wall, const std::vector<std::int64_t>& plus,
                   const std::vector<std::int64_t>& minus) {
    require_genus0(shape);
    Problem pp = shape;
    Problem pm = shape;
    pp.x = plus;
    pm.x = minus;
    validate_problem(pp);
    validate_problem(pm);
    if (wall.form.eval(plus, shape.k) <= 0 || wall.form.eval(minus, shape.k) >= 0) {
        throw ChamberError("flanking points must have delta_I(plus) > 0 > delta_I(minus)");
    }
    const auto sp = sign_vector(shape.n, shape.k, plus);
    const auto sm = sign_vector(shape.n, shape.k, minus);
    const auto all = walls(shape.n, shape.k);
    std::vector<int> comp;
    for (int i = 1; i <= shape.n; ++i) {
        if (!std::binary_search(wall.subset.begin(), wall.subset.end(), i)) {
            comp.push_back(i);
        }
    }
    for (std::size_t w = 0; w < all.size(); ++w) {
        if (all[w].subset == wall.subset || all[w].subset == comp) {
            continue;
        }
        if (sp[w] != sm[w] || sp[w] == 0) {
            throw ChamberError("flanking points straddle additional wall " + subset_str(all[w].subset));
        }
    }
    return chamber_polynomial(pp) - chamber_polynomial(pm);
}

Poly wall_crossing(const Problem& shape, const Wall& wall) {
    const auto fp = find_flanking_points(shape, wall);
    return wall_crossing(shape, wall, fp.plus, fp.minus);
}

namespace {

// Chamber polynomial of the cut subproblem on `side` plus one extra end of
// value cut, rewritten in the variables of the big problem.
Poly cut_factor(const Problem& shape, const std::vector<int>& side, const std::vector<std::int64_t>& point,
                std::int64_t cut) {
    Problem sub;
    sub.g = 0;
    sub.k = shape.k;
    sub.n = static_cast<int>(side.size()) + 1;
    for (int i : side) {
        sub.x.push_back(point[static_cast<std::size_t>(i) - 1]);
        sub.e.push_back(shape.e[static_cast<std::size_t>(i) - 1]);
    }
    sub.x.push_back(cut);
    sub.e.push_back(0);
    const Poly local = chamber_polynomial(sub);
    std::map<int, Poly> rename;
    for (std::size_t j = 0; j < side.size(); ++j) {
        rename.emplace(static_cast<int>(j) + 1, Poly::variable(side[j]));
    }
    return local.substitute(rename);
}

}  // namespace

Poly wall_crossing_formula(const Problem& shape, const Wall& wall) {
    require_genus0(shape);
    const int n = shape.n;
    std::vector<int> comp;
    int e_in = 0;
    for (int i = 1; i <= n; ++i) {
        if (std::binary_search(wall.subset.begin(), wall.subset.end(), i)) {
            e_in += shape.e[static_cast<std::size_t>(i) - 1];
        } else {
            comp.push_back(i);
        }
    }
    const int r = n - 2 - shape.psi_total();
    const int r1 = static_cast<int>(wall.subset.size()) - 1 - e_in;
    const int r2 = static_cast<int>(comp.size()) - 1 - (shape.psi_total() - e_in);
    // r_j = 0 leaves a side with too many psi conditions: no covers there.
    if (r1 <= 0 || r2 <= 0) {
        return Poly();
    }
    const auto fp = find_flanking_points(shape, wall);
    const std::int64_t delta = wall.form.eval(fp.plus, shape.k);
    const Poly p_in = cut_factor(shape, wall.subset, fp.plus, -delta);
    const Poly p_out = cut_factor(shape, comp, fp.plus, delta);
    Poly result = Poly(Rational(multinomial(r, {r1, r2}))) * Poly::from_linform(wall.form, shape.k) * p_in * p_out;
    return result.restrict_to_degree_hyperplane(n, shape.k, 0);
}

Vanishing classify(const Problem& p) {
    require_genus0(p);
    validate_problem(p);
    if (p.k == 0) {
        const bool zero_profile = std::all_of(p.x.begin(), p.x.end(), [](std::int64_t v) { return v == 0; });
        return zero_profile && p.n > p.psi_total() + 3 ? Vanishing::Zero : Vanishing::Positive;
    }
    if (p.k % 2 != 0) {
        return Vanishing::Positive;
    }
    // Every subset I must satisfy sum_I (e_i - m_i + 1) < 1. The largest
    // subset sum collects the positive terms, so it suffices that each term
    // is at most 0.
    for (int i = 0; i < p.n; ++i) {
        const std::int64_t twice = 2 * p.x[static_cast<std::size_t>(i)];
        if (twice % p.k != 0) {
            return Vanishing::Positive;
        }
        const std::int64_t m = twice / p.k;
        if (m <= 0 || p.e[static_cast<std::size_t>(i)] - m + 1 > 0) {
            return Vanishing::Positive;
        }
    }
    return Vanishing::Zero;
}

std::vector<std::vector<std::int64_t>> sample_chamber_points(const Problem& p, int count, std::int64_t radius,
                                                            std::mt19937_64& rng) {
    const auto target = sign_vector(p.n, p.k, p.x);
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> out;
    std::uniform_int_distribution<std::int64_t> dist(-radius, radius);
    for (int attempt = 0; attempt < 1000 * std::max(count, 1) && static_cast<int>(out.size()) < count; ++attempt) {
        auto y = p.x;
        std::int64_t shift = 0;
        for (int i = 0; i + 1 < p.n; ++i) {
            const auto d = dist(rng);
            y[static_cast<std::size_t>(i)] += d;
            shift += d;
        }
        y.back() -= shift;
        if (sign_vector(p.n, p.k, y) == target && seen.insert(y).second) {
            out.push_back(std::move(y));
        }
    }
    return out;
}

}  // namespace leaky
