#include "leaky/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace leaky {

int CoverGraph::first_betti() const {
    if (vertices.empty()) {
        return 0;
    }
    // Assumes connectivity; check_cover verifies it separately.
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
}

int CoverGraph::total_vertex_genus() const {
    int total = 0;
    for (const auto& v : vertices) {
        total += v.genus;
    }
    return total;
}

std::vector<int> CoverGraph::positions() const {
    std::vector<int> pos(vertices.size(), -1);
    for (std::size_t p = 0; p < order.size(); ++p) {
        const int v = order[p];
        if (v >= 0 && static_cast<std::size_t>(v) < pos.size()) {
            pos[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    }
    return pos;
}

CoverGraph normalize_positions(const CoverGraph& c) {
    const auto pos = c.positions();
    CoverGraph out;
    out.vertices.resize(c.vertices.size());
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        out.vertices[static_cast<std::size_t>(pos[v])] = c.vertices[v];
    }
    for (const auto& e : c.edges) {
        out.edges.push_back({pos[static_cast<std::size_t>(e.from)], pos[static_cast<std::size_t>(e.to)], e.weight});
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.order.resize(c.vertices.size());
    std::iota(out.order.begin(), out.order.end(), 0);
    return out;
}

std::int64_t weight_at(const EdgeWeight& w, const Problem& p) {
    if (const auto* value = std::get_if<std::int64_t>(&w)) {
        return *value;
    }
    return std::get<LinForm>(w).eval(p.x, p.k);
}

int valence(const CoverGraph& c, int v) {
    int val = static_cast<int>(c.vertices[static_cast<std::size_t>(v)].ends.size());
    for (const auto& e : c.edges) {
        val += (e.from == v) + (e.to == v);
    }
    return val;
}

namespace {

std::string vname(int v) { return "vertex " + std::to_string(v); }

bool connected(const CoverGraph& c) {
    const std::size_t nv = c.vertices.size();
    if (nv == 0) {
        return false;
    }
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        }
        return a;
    };
    std::size_t components = nv;
    for (const auto& e : c.edges) {
        const int a = find(e.from);
        const int b = find(e.to);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

}  // namespace

void check_cover(const Problem& p, const CoverGraph& c) {
    const int nv = static_cast<int>(c.vertices.size());
    if (nv != p.vertex_count()) {
        throw InvalidCover("cover has " + std::to_string(nv) + " vertices, expected c+1 = " +
                           std::to_string(p.vertex_count()));
    }
    std::vector<int> owner(static_cast<std::size_t>(p.n) + 1, -1);
    for (int v = 0; v < nv; ++v) {
        const auto& vert = c.vertices[static_cast<std::size_t>(v)];
        if (vert.genus < 0) {
            throw InvalidCover(vname(v) + " has negative genus");
        }
        for (int i : vert.ends) {
            if (i < 1 || i > p.n) {
                throw InvalidCover(vname(v) + " carries unknown end " + std::to_string(i));
            }
            if (owner[static_cast<std::size_t>(i)] != -1) {
                throw InvalidCover("end " + std::to_string(i) + " attached twice");
            }
            owner[static_cast<std::size_t>(i)] = v;
        }
    }
    for (int i = 1; i <= p.n; ++i) {
        if (owner[static_cast<std::size_t>(i)] == -1) {
            throw InvalidCover("end " + std::to_string(i) + " is not attached");
        }
    }
    for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
        const auto& e = c.edges[ei];
        if (e.from < 0 || e.from >= nv || e.to < 0 || e.to >= nv || e.from == e.to) {
            throw InvalidCover("edge " + std::to_string(ei) + " has invalid endpoints");
        }
    }
    if (!connected(c)) {
        throw InvalidCover("cover graph is disconnected");
    }
    if (c.first_betti() + c.total_vertex_genus() != p.g) {
        throw InvalidCover("genus h1 + sum g(v) = " + std::to_string(c.first_betti() + c.total_vertex_genus()) +
                           " differs from g = " + std::to_string(p.g));
    }
    if (static_cast<int>(c.order.size()) != nv) {
        throw InvalidCover("order must list every vertex exactly once");
    }
    const auto pos = c.positions();
    for (int v = 0; v < nv; ++v) {
        if (pos[static_cast<std::size_t>(v)] < 0 ||
            std::count(c.order.begin(), c.order.end(), v) != 1) {
            throw InvalidCover("order must list every vertex exactly once");
        }
    }
    for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
        const auto& e = c.edges[ei];
        const std::int64_t w = weight_at(e.weight, p);
        if (w <= 0) {
            throw InvalidCover("edge " + std::to_string(ei) + " has nonpositive weight " + std::to_string(w));
        }
        if (pos[static_cast<std::size_t>(e.from)] >= pos[static_cast<std::size_t>(e.to)]) {
            throw InvalidCover("edge " + std::to_string(ei) + " points right to left");
        }
    }
    for (int v = 0; v < nv; ++v) {
        const auto& vert = c.vertices[static_cast<std::size_t>(v)];
        const int val = valence(c, v);
        int psi = 0;
        std::int64_t net = 0;  // d^l - d^r
        for (int i : vert.ends) {
            psi += p.e[static_cast<std::size_t>(i) - 1];
            net += p.x[static_cast<std::size_t>(i) - 1];
        }
        if (val != psi + 3 - 2 * vert.genus) {
            throw InvalidCover(vname(v) + " violates the psi condition: valence " + std::to_string(val) +
                               ", expected " + std::to_string(psi + 3 - 2 * vert.genus));
        }
        for (const auto& e : c.edges) {
            const std::int64_t w = weight_at(e.weight, p);
            if (e.to == v) {
                net += w;
            }
            if (e.from == v) {
                net -= w;
            }
        }
        const std::int64_t expected = p.k * (2 * vert.genus - 2 + val);
        if (net != expected) {
            throw InvalidCover(vname(v) + " violates leaky balance: d^l - d^r = " + std::to_string(net) +
                               ", expected " + std::to_string(expected));
        }
    }
}

std::uint64_t automorphism_order(const CoverGraph& c) {
    std::map<std::tuple<int, int, EdgeWeight>, std::uint64_t> groups;
    for (const auto& e : c.edges) {
        ++groups[{std::min(e.from, e.to), std::max(e.from, e.to), e.weight}];
    }
    std::uint64_t aut = 1;
    for (const auto& [key, size] : groups) {
        for (std::uint64_t f = 2; f <= size; ++f) {
            aut *= f;
        }
    }
    return aut;
}

VertexKey vertex_key(const Problem& p, const CoverGraph& c, int v) {
    VertexKey key;
    const auto& vert = c.vertices[static_cast<std::size_t>(v)];
    key.genus = vert.genus;
    key.k = p.k;
    for (int i : vert.ends) {
        key.degrees.push_back(p.x[static_cast<std::size_t>(i) - 1]);
        key.psi.push_back(p.e[static_cast<std::size_t>(i) - 1]);
    }
    for (const auto& e : c.edges) {
        if (e.to == v) {
            key.degrees.push_back(weight_at(e.weight, p));
            key.psi.push_back(0);
        }
        if (e.from == v) {
            key.degrees.push_back(-weight_at(e.weight, p));
            key.psi.push_back(0);
        }
    }
    key.canonicalize();
    return key;
}

WeightedCover assemble_multiplicity(const Problem& p, const CoverGraph& c, const VertexOracle& oracle) {
    WeightedCover wc;
    wc.cover = c;
    wc.aut = automorphism_order(c);
    for (const auto& e : c.edges) {
        wc.edge_product *= Rational(weight_at(e.weight, p));
    }
    Rational mult = wc.edge_product / Rational(static_cast<std::int64_t>(wc.aut));
    for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v) {
        wc.vertex_mults.push_back(oracle.vertex_mult(vertex_key(p, c, v)));
        mult *= wc.vertex_mults.back();
    }
    wc.multiplicity = mult;
    return wc;
}

}  // namespace leaky
