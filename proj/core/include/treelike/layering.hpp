#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "treelike/graph.hpp"
#include "treelike/metric.hpp"

namespace treelike {

/// Identifies a cluster as (layer index, cluster index within layer).
using ClusterId = std::pair<std::uint32_t, std::uint32_t>;

/// BFS layers around `source`, each layer split into clusters: two vertices
/// of layer i share a cluster iff they are connected in the subgraph induced
/// on the vertices at distance >= i from the source. Clusters within a layer
/// are ordered by smallest member id.
struct LayeringPartition {
    VertexId source = 0;
    std::vector<std::vector<VertexSubset>> layers; // layers[i] = clusters of layer i
    std::vector<ClusterId> cluster_of;             // per vertex
};

/// The cluster graph: clusters are nodes, adjacent iff some edge of the
/// graph joins them. It is always a tree, with every edge joining clusters
/// in consecutive layers.
struct LayeringTree {
    std::vector<ClusterId> nodes;                        // sorted
    std::vector<std::pair<std::size_t, std::size_t>> edges; // indices into nodes, sorted
};

LayeringPartition layering_partition(const Graph& g, const DistanceMatrix& dm, VertexId s);

/// Builds the cluster tree and asserts the tree invariants (violations are
/// internal bugs, not input errors).
LayeringTree layering_tree(const Graph& g, const LayeringPartition& lp);

/// Largest in-graph diameter of a cluster; 0 when all clusters are singletons.
Dist cluster_diameter_at(const DistanceMatrix& dm, const LayeringPartition& lp);

struct ClusterDiameterExtremum {
    Dist value = 0;
    VertexId start = 0; // achieving start vertex, smallest id on ties
};

/// Exact min/max of the cluster-diameter over all n start vertices.
ClusterDiameterExtremum cluster_diameter_min(const Graph& g, const DistanceMatrix& dm);
ClusterDiameterExtremum cluster_diameter_max(const Graph& g, const DistanceMatrix& dm);

/// DOT export of the layering tree. Node ids are "c<layer>_<index>", node
/// labels list the members' external labels sorted; edges are emitted sorted.
void write_layering_dot(const Graph& g, const LayeringPartition& lp, const LayeringTree& lt,
                        std::ostream& out);

} // namespace treelike
