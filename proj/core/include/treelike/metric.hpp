#pragma once

#include <span>
#include <vector>

#include "treelike/graph.hpp"

namespace treelike {

/// All-pairs shortest-path hop counts of a connected graph. Symmetric,
/// zero diagonal, entry 1 exactly on edges. Immutable after construction.
class DistanceMatrix {
public:
    explicit DistanceMatrix(VertexId n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

    Dist at(VertexId u, VertexId v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(VertexId u, VertexId v, Dist d) { d_[static_cast<std::size_t>(u) * n_ + v] = d; }
    VertexId size() const { return n_; }

private:
    VertexId n_;
    std::vector<Dist> d_;
};

/// BFS distances from s. Throws PreconditionError naming an unreached
/// vertex when g is disconnected.
std::vector<Dist> bfs_distances(const Graph& g, VertexId s);

/// n BFS sweeps. Same connectivity precondition as bfs_distances.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Metric interval I(u,v): all z with d(u,v) = d(u,z) + d(z,v). Sorted.
VertexSubset interval(const DistanceMatrix& dm, VertexId u, VertexId v);

/// Ball B_r(s): all v with d(s,v) <= r. Sorted.
VertexSubset ball(const DistanceMatrix& dm, VertexId s, Dist r);

Dist eccentricity(const DistanceMatrix& dm, VertexId v);
Dist radius(const DistanceMatrix& dm);
Dist diameter(const DistanceMatrix& dm);

/// True iff the subgraph induced on s is connected and preserves every
/// pairwise distance of g.
bool is_isometric_subset(const Graph& g, const DistanceMatrix& dm, std::span<const VertexId> s);

} // namespace treelike
