#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "leaky/linform.hpp"
#include "leaky/problem.hpp"
#include "leaky/rational.hpp"
#include "leaky/vertex_oracle.hpp"

namespace leaky {

struct CoverVertex {
    int genus = 0;
    std::vector<int> ends;  // 1-based marking labels, sorted

    friend bool operator==(const CoverVertex&, const CoverVertex&) = default;
    friend auto operator<=>(const CoverVertex&, const CoverVertex&) = default;
};

/// A numeric expansion factor, or an affine form in x and k (symbolic mode).
using EdgeWeight = std::variant<std::int64_t, LinForm>;

/// Bounded edge, oriented left to right along the target line.
struct CoverEdge {
    int from = 0;
    int to = 0;
    EdgeWeight weight = std::int64_t{0};

    friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
    friend auto operator<=>(const CoverEdge&, const CoverEdge&) = default;
};

/// One tropical leaky cover of a line graph: decorated multigraph plus the
/// left-to-right order of its vertices (one vertex over each target vertex).
struct CoverGraph {
    std::vector<CoverVertex> vertices;
    std::vector<CoverEdge> edges;
    std::vector<int> order;  // order[p] = vertex at position p

    int first_betti() const;
    int total_vertex_genus() const;
    std::vector<int> positions() const;  // inverse of order

    friend bool operator==(const CoverGraph&, const CoverGraph&) = default;
    friend auto operator<=>(const CoverGraph&, const CoverGraph&) = default;
};

/// Relabels vertices by position (vertex i sits at position i) and sorts the
/// edge list. Two covers are isomorphic iff their normal forms are equal.
CoverGraph normalize_positions(const CoverGraph& c);

class InvalidCover : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::int64_t weight_at(const EdgeWeight& w, const Problem& p);

/// Valence of vertex v: incident edges plus attached ends.
int valence(const CoverGraph& c, int v);

/// Verifies partition of ends, connectivity, genus, vertex count, psi
/// conditions, leaky balance and edge orientation against p. Symbolic
/// weights are evaluated at p.x. Throws InvalidCover naming the culprit.
void check_cover(const Problem& p, const CoverGraph& c);

/// Product over groups of parallel edges with equal endpoints and weight of
/// (group size)!.
std::uint64_t automorphism_order(const CoverGraph& c);

/// Local data at vertex v for the vertex-multiplicity oracle.
VertexKey vertex_key(const Problem& p, const CoverGraph& c, int v);

struct WeightedCover {
    CoverGraph cover;
    std::uint64_t aut = 1;
    Rational edge_product{1};
    std::vector<Rational> vertex_mults;
    Rational multiplicity{0};
};

/// multiplicity = edge_product * prod(vertex_mults) / aut, with numeric
/// weights taken at p. Propagates MissingVertexData from the oracle.
WeightedCover assemble_multiplicity(const Problem& p, const CoverGraph& c, const VertexOracle& oracle);

}  // namespace leaky
