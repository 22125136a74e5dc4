#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "leaky/cover.hpp"
#include "leaky/linform.hpp"
#include "leaky/problem.hpp"
#include "leaky/rational.hpp"
#include "leaky/vertex_oracle.hpp"

namespace leaky {

/// Unweighted decorated multigraph. Vertices carrying ends come first, ordered
/// by smallest end; end-free vertices follow. Edges are unordered pairs
/// (u < v) listed in sorted order; a BFS spanning tree rooted at vertex 0
/// splits them into tree edges and free edges.
struct CombinatorialType {
    std::vector<CoverVertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> tree_edges;
    std::vector<int> free_edges;

    int first_betti() const { return static_cast<int>(free_edges.size()); }
    int edge_degree(int v) const;

    friend bool operator==(const CombinatorialType&, const CombinatorialType&) = default;
};

/// All isomorphism classes of types for (g, n, e). Depends only on those
/// three fields of p. Results are cached and safe to request concurrently.
std::vector<CombinatorialType> enumerate_types(const Problem& p);

/// Flow through edges[i] from edges[i].first to edges[i].second:
///   base(x, k) + sum_j free_coeffs[j] * t_j
/// where t_j is the signed flow on free edge j in its own first->second sense.
struct EdgeFlow {
    LinForm base;
    std::vector<int> free_coeffs;
};

std::vector<EdgeFlow> edge_flows(const Problem& p, const CombinatorialType& t);

/// Tree types only: the flow forms on every edge (first -> second). A
/// positive value orients the edge first -> second; zero kills the cover.
std::vector<LinForm> solve_weights_tree(const Problem& p, const CombinatorialType& t);

using Arc = std::pair<int, int>;

/// Number of total orders on 0..nv-1 extending the arcs. Zero on a cycle.
std::uint64_t count_linear_extensions(int nv, const std::vector<Arc>& arcs);
/// The extensions themselves, each as a vertex list left to right,
/// lexicographically sorted.
std::vector<std::vector<int>> linear_extensions(int nv, const std::vector<Arc>& arcs);

class WeightBoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scan bound for free edge flows: sum|x_i| + |k|(2g-2+n)(c+g').
std::int64_t free_weight_bound(const Problem& p, int free_edges);

/// Every cover of p up to isomorphism with its multiplicity, sorted by the
/// positional normal form. jobs <= 0 means hardware concurrency.
std::vector<WeightedCover> enumerate_covers(const Problem& p, const VertexOracle& oracle, int jobs = 1);

Rational compute_H(const Problem& p, const VertexOracle& oracle, int jobs = 1);

}  // namespace leaky
