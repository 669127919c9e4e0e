#ifndef LEGF_GRAPH_HPP
#define LEGF_GRAPH_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "legf/error.hpp"

namespace legf {

using VertexId = std::string;
using EdgeId = std::string;

// Finite multigraph. Loops (u == v) and parallel edges are allowed.
struct AbstractGraph {
    struct Edge {
        EdgeId id;
        VertexId u;
        VertexId v;
    };

    std::vector<VertexId> vertices;
    std::vector<Edge> edges;

    static AbstractGraph make(std::vector<VertexId> vertices,
                              std::vector<Edge> edges);

    // Throws Error("malformed-graph", ...) when an invariant fails.
    void check_well_formed() const;

    bool has_vertex(const VertexId& v) const;
    const Edge* find_edge(const EdgeId& id) const;
    int valence(const VertexId& v) const;  // loops count twice

    // (edge id, neighbour) pairs; a loop appears twice.
    std::vector<std::pair<EdgeId, VertexId>> incident(const VertexId& v) const;

    std::size_t component_count() const;
    bool connected() const;  // empty graph counts as connected
};

// A simple cycle. vertices[i] is the tail of edges[i]; the head of the last
// edge is vertices[0] again. A loop edge forms a cycle of length 1.
struct Cycle {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;

    std::size_t length() const { return edges.size(); }
};

// Canonical representative: the rotation/reflection with the
// lexicographically least (edge sequence, vertex sequence).
Cycle canonical_cycle(const Cycle& c);
std::string cycle_key(const Cycle& c);  // canonical edge sequence, comma-joined
bool cycle_valid(const AbstractGraph& g, const Cycle& c);

// All simple cycles, canonicalized, sorted by (length, key).
// Exponential in general; fine at the scales this library targets.
std::vector<Cycle> enumerate_cycles(const AbstractGraph& g);

struct CutSet {
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;
};

// Vertices/edges whose deletion increases the number of connected components.
CutSet cut_set(const AbstractGraph& g);

// Series-parallel reduction: delete loops, drop valence<=1 vertices, merge
// parallel edges, suppress valence-2 vertices, to a fixpoint. The graph is
// K4-minor-free iff everything reduces away.
bool is_k4_minor_free(const AbstractGraph& g);

struct WitnessPath {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;  // size edges.size() + 1
};

// A K4 subdivision: four branch vertices and six internally disjoint paths,
// in pair order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
struct MinorWitness {
    std::array<VertexId, 4> branch;
    std::array<WitnessPath, 6> paths;
};

bool witness_valid(const AbstractGraph& g, const MinorWitness& w);

// One witness if a K4 subdivision exists; nullopt iff is_k4_minor_free(g).
std::optional<MinorWitness> find_k4_subdivision(const AbstractGraph& g);

// Every K4 subdivision, deduplicated by (branch set, path edge sets).
std::vector<MinorWitness> all_k4_subdivisions(const AbstractGraph& g);

// Exhaustive branch-set search straight from the minor definition.
// Guarded: throws Error("instance-too-large") beyond 8 vertices / 14 edges.
bool brute_force_k4_oracle(const AbstractGraph& g);

}  // namespace legf

#endif
