#include "leaky/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace leaky {

int CombinatorialType::edge_degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges) {
        d += (a == v) + (b == v);
    }
    return d;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Calls emit with every set partition of {1..n}, blocks ordered by least element.
void for_each_set_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            emit(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(i);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(1);
}

// Loopless multigraphs with the given degree sequence.
void for_each_multigraph(std::vector<int> rem, const std::function<void(const EdgeList&)>& emit) {
    const int nv = static_cast<int>(rem.size());
    EdgeList edges;
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i >= nv - 1) {
            if (nv == 0 || rem[static_cast<std::size_t>(nv - 1)] == 0) {
                emit(edges);
            }
            return;
        }
        if (rem[static_cast<std::size_t>(i)] == 0) {
            rec(i + 1, i + 2);
            return;
        }
        if (j >= nv) {
            return;
        }
        const int top = std::min(rem[static_cast<std::size_t>(i)], rem[static_cast<std::size_t>(j)]);
        for (int m = top; m >= 0; --m) {
            for (int r = 0; r < m; ++r) {
                edges.emplace_back(i, j);
            }
            rem[static_cast<std::size_t>(i)] -= m;
            rem[static_cast<std::size_t>(j)] -= m;
            rec(i, j + 1);
            rem[static_cast<std::size_t>(i)] += m;
            rem[static_cast<std::size_t>(j)] += m;
            edges.resize(edges.size() - static_cast<std::size_t>(m));
        }
    };
    rec(0, 1);
}

bool is_connected(int nv, const EdgeList& edges) {
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        return parent[static_cast<std::size_t>(a)] == a ? a : parent[static_cast<std::size_t>(a)] = find(parent[static_cast<std::size_t>(a)]);
    };
    int comps = nv;
    for (const auto& [a, b] : edges) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            --comps;
        }
    }
    return comps == 1;
}

EdgeList relabel(const EdgeList& edges, const std::vector<int>& perm) {
    EdgeList out;
    out.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        const int u = perm[static_cast<std::size_t>(a)];
        const int v = perm[static_cast<std::size_t>(b)];
        out.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Smallest relabeling under permutations of interchangeable end-free vertices
// (ranges [lo0, hi0) and [lo1, hi1) hold genus 0 and genus 1 end-free vertices).
EdgeList canonical_edges(const EdgeList& edges, int nv, int lo0, int hi0, int hi1) {
    std::vector<int> perm(static_cast<std::size_t>(nv));
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best = relabel(edges, perm);
    auto p0 = perm.begin() + lo0;
    auto p1 = perm.begin() + hi0;
    auto p2 = perm.begin() + hi1;
    do {
        do {
            best = std::min(best, relabel(edges, perm));
        } while (std::next_permutation(p1, p2));
    } while (std::next_permutation(p0, p1));
    return best;
}

void choose_spanning_tree(CombinatorialType& t) {
    const int nv = static_cast<int>(t.vertices.size());
    std::vector<bool> seen(static_cast<std::size_t>(nv), false);
    std::vector<bool> in_tree(t.edges.size(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (std::size_t i = 0; i < t.edges.size(); ++i) {
            const auto [a, b] = t.edges[i];
            if (a != u && b != u) {
                continue;
            }
            const int w = a == u ? b : a;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                in_tree[i] = true;
                queue.push_back(w);
            }
        }
    }
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        (in_tree[i] ? t.tree_edges : t.free_edges).push_back(static_cast<int>(i));
    }
}

std::vector<CombinatorialType> build_types(const Problem& p) {
    const int nv = p.vertex_count();
    std::vector<CombinatorialType> out;
    if (nv < 1) {
        return out;
    }
    std::set<std::pair<std::vector<CoverVertex>, EdgeList>> seen;
    const int min_degree = nv >= 2 ? 1 : 0;

    for_each_set_partition(p.n, [&](const std::vector<std::vector<int>>& blocks) {
        const int m = static_cast<int>(blocks.size());
        if (m > nv) {
            return;
        }
        std::vector<int> genus(static_cast<std::size_t>(m), 0);
        std::function<void(int, int)> assign = [&](int b, int used) {
            if (b < m) {
                for (int h = 0; used + h <= p.g; ++h) {
                    genus[static_cast<std::size_t>(b)] = h;
                    assign(b + 1, used + h);
                }
                return;
            }
            std::vector<int> degree;
            std::vector<CoverVertex> verts;
            for (int i = 0; i < m; ++i) {
                const auto& block = blocks[static_cast<std::size_t>(i)];
                int psi = 0;
                for (int end : block) {
                    psi += p.e[static_cast<std::size_t>(end) - 1];
                }
                const int h = genus[static_cast<std::size_t>(i)];
                const int d = psi + 3 - 2 * h - static_cast<int>(block.size());
                if (d < min_degree) {
                    return;
                }
                degree.push_back(d);
                verts.push_back({h, block});
            }
            const int endless = nv - m;
            for (int q1 = 0; q1 <= endless && used + q1 <= p.g; ++q1) {
                const int q0 = endless - q1;
                const int h1 = p.g - used - q1;
                const int ne = nv - 1 + h1;
                auto deg = degree;
                auto vs = verts;
                deg.insert(deg.end(), static_cast<std::size_t>(q0), 3);
                deg.insert(deg.end(), static_cast<std::size_t>(q1), 1);
                vs.insert(vs.end(), static_cast<std::size_t>(q0), CoverVertex{0, {}});
                vs.insert(vs.end(), static_cast<std::size_t>(q1), CoverVertex{1, {}});
                if (std::accumulate(deg.begin(), deg.end(), 0) != 2 * ne) {
                    continue;
                }
                for_each_multigraph(deg, [&](const EdgeList& edges) {
                    if (!is_connected(nv, edges)) {
                        return;
                    }
                    auto canon = canonical_edges(edges, nv, m, m + q0, nv);
                    if (seen.emplace(vs, canon).second) {
                        CombinatorialType t;
                        t.vertices = vs;
                        t.edges = std::move(canon);
                        choose_spanning_tree(t);
                        out.push_back(std::move(t));
                    }
                });
            }
        };
        assign(0, 0);
    });
    std::sort(out.begin(), out.end(), [](const CombinatorialType& a, const CombinatorialType& b) {
        return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
    });
    return out;
}

}  // namespace

std::vector<CombinatorialType> enumerate_types(const Problem& p) {
    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<int>>, std::vector<CombinatorialType>> cache;
    const auto key = std::make_pair(p.g, p.e);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    auto types = build_types(p);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(types)).first->second;
}

std::vector<EdgeFlow> edge_flows(const Problem& /*p*/, const CombinatorialType& t) {
    const int nv = static_cast<int>(t.vertices.size());
    std::vector<LinForm> excess(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        const auto& vert = t.vertices[static_cast<std::size_t>(v)];
        LinForm b;
        for (int i : vert.ends) {
            b.add_variable(i, 1);
        }
        const int val = static_cast<int>(vert.ends.size()) + t.edge_degree(v);
        b.add_leak(-(2 * vert.genus - 2 + val));
        excess[static_cast<std::size_t>(v)] = b;
    }
    const std::size_t nf = t.free_edges.size();
    std::vector<EdgeFlow> flows(t.edges.size(), EdgeFlow{LinForm{}, std::vector<int>(nf, 0)});
    for (std::size_t j = 0; j < nf; ++j) {
        flows[static_cast<std::size_t>(t.free_edges[j])].free_coeffs[j] = 1;
    }
    for (int ti : t.tree_edges) {
        // Side of the cut containing edges[ti].first.
        std::vector<bool> side(static_cast<std::size_t>(nv), false);
        std::vector<int> stack{t.edges[static_cast<std::size_t>(ti)].first};
        side[static_cast<std::size_t>(stack[0])] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int tj : t.tree_edges) {
                if (tj == ti) {
                    continue;
                }
                const auto [a, b] = t.edges[static_cast<std::size_t>(tj)];
                const int w = a == u ? b : (b == u ? a : -1);
                if (w >= 0 && !side[static_cast<std::size_t>(w)]) {
                    side[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        auto& flow = flows[static_cast<std::size_t>(ti)];
        for (int v = 0; v < nv; ++v) {
            if (side[static_cast<std::size_t>(v)]) {
                flow.base += excess[static_cast<std::size_t>(v)];
            }
        }
        for (std::size_t j = 0; j < nf; ++j) {
            const auto [c, d] = t.edges[static_cast<std::size_t>(t.free_edges[j])];
            const bool in_c = side[static_cast<std::size_t>(c)];
            const bool in_d = side[static_cast<std::size_t>(d)];
            if (in_c && !in_d) {
                flow.free_coeffs[j] = -1;
            } else if (in_d && !in_c) {
                flow.free_coeffs[j] = 1;
            }
        }
    }
    return flows;
}

std::vector<LinForm> solve_weights_tree(const Problem& p, const CombinatorialType& t) {
    if (!t.free_edges.empty()) {
        throw std::invalid_argument("solve_weights_tree requires a tree type");
    }
    std::vector<LinForm> out;
    for (auto& f : edge_flows(p, t)) {
        out.push_back(std::move(f.base));
    }
    return out;
}

namespace {

std::vector<std::uint64_t> predecessor_masks(int nv, const std::vector<Arc>& arcs) {
    if (nv > 63) {
        throw std::invalid_argument("too many vertices for linear extension counting");
    }
    std::vector<std::uint64_t> pred(static_cast<std::size_t>(nv), 0);
    for (const auto& [a, b] : arcs) {
        pred[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
    return pred;
}

}  // namespace

std::uint64_t count_linear_extensions(int nv, const std::vector<Arc>& arcs) {
    if (nv > 24) {
        throw std::invalid_argument("linear extension counting supports at most 24 vertices");
    }
    const auto pred = predecessor_masks(nv, arcs);
    const std::size_t full = (std::size_t{1} << nv);
    std::vector<std::uint64_t> dp(full, 0);
    dp[0] = 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
        if (dp[mask] == 0) {
            continue;
        }
        for (int v = 0; v < nv; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (!(mask & bit) && (pred[static_cast<std::size_t>(v)] & ~mask) == 0) {
                dp[mask | bit] += dp[mask];
            }
        }
    }
    return dp[full - 1];
}

std::vector<std::vector<int>> linear_extensions(int nv, const std::vector<Arc>& arcs) {
    const auto pred = predecessor_masks(nv, arcs);
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t placed) {
        if (static_cast<int>(prefix.size()) == nv) {
            out.push_back(prefix);
            return;
        }
        for (int v = 0; v < nv; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (!(placed & bit) && (pred[static_cast<std::size_t>(v)] & ~placed) == 0) {
                prefix.push_back(v);
                rec(placed | bit);
                prefix.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

std::int64_t free_weight_bound(const Problem& p, int free_edges) {
    std::int64_t total = 0;
    for (auto xi : p.x) {
        total += std::llabs(xi);
    }
    return total + std::llabs(p.k) * p.euler() * (p.branch_count() + free_edges);
}

namespace {

std::set<CoverGraph> covers_of_type(const Problem& p, const CombinatorialType& t) {
    std::set<CoverGraph> out;
    const auto flows = edge_flows(p, t);
    const int nv = static_cast<int>(t.vertices.size());
    const std::size_t ne = t.edges.size();
    const std::size_t nf = t.free_edges.size();
    std::vector<std::int64_t> base(ne);
    for (std::size_t i = 0; i < ne; ++i) {
        base[i] = flows[i].base.eval(p.x, p.k);
    }
    const std::int64_t bound = free_weight_bound(p, static_cast<int>(nf));
    std::vector<std::int64_t> tv(nf, -bound);
    std::vector<std::int64_t> w(ne);
    std::vector<Arc> arcs(ne);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < ne && ok; ++i) {
            std::int64_t value = base[i];
            for (std::size_t j = 0; j < nf; ++j) {
                value += flows[i].free_coeffs[j] * tv[j];
            }
            w[i] = value;
            ok = value != 0;
            const auto [a, b] = t.edges[i];
            arcs[i] = value > 0 ? Arc{a, b} : Arc{b, a};
        }
        if (ok && count_linear_extensions(nv, arcs) > 0) {
            for (auto value : tv) {
                if (std::llabs(value) >= bound) {
                    throw WeightBoundExceeded("admissible free edge flow reached the scan bound " +
                                              std::to_string(bound));
                }
            }
            for (const auto& order : linear_extensions(nv, arcs)) {
                CoverGraph c;
                c.vertices = t.vertices;
                for (std::size_t i = 0; i < ne; ++i) {
                    c.edges.push_back({arcs[i].first, arcs[i].second, EdgeWeight{static_cast<std::int64_t>(std::llabs(w[i]))}});
                }
                c.order = order;
                out.insert(normalize_positions(c));
            }
        }
        // Odometer over [-bound, bound] \ {0}.
        std::size_t j = 0;
        for (; j < nf; ++j) {
            tv[j] = tv[j] == -1 ? 1 : tv[j] + 1;
            if (tv[j] <= bound) {
                break;
            }
            tv[j] = -bound;
        }
        if (j == nf) {
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<WeightedCover> enumerate_covers(const Problem& p, const VertexOracle& oracle, int jobs) {
    validate_problem(p);
    const auto types = enumerate_types(p);
    std::vector<std::set<CoverGraph>> per_type(types.size());
    std::vector<std::exception_ptr> errors(types.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < types.size(); i = next++) {
            try {
                per_type[i] = covers_of_type(p, types[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs <= 0) {
        jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), types.size());
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < nthreads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
    std::set<CoverGraph> all;
    for (auto& s : per_type) {
        all.merge(s);
    }
    std::vector<WeightedCover> out;
    out.reserve(all.size());
    for (const auto& c : all) {
        out.push_back(assemble_multiplicity(p, c, oracle));
    }
    return out;
}

Rational compute_H(const Problem& p, const VertexOracle& oracle, int jobs) {
    Rational total;
    for (const auto& wc : enumerate_covers(p, oracle, jobs)) {
        total += wc.multiplicity;
    }
    return total;
}

}  // namespace leaky
