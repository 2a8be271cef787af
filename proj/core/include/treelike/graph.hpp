#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treelike {

using VertexId = std::uint32_t;
using Dist = std::uint32_t;

/// Ordered sequence of vertices; consecutive entries are expected to be
/// adjacent and no vertex repeats.
using Path = std::vector<VertexId>;

/// Sorted list of distinct internal vertex ids.
using VertexSubset = std::vector<VertexId>;

/// Hard cap on the vertex count accepted by Graph construction. Distance
/// values then fit comfortably in Dist and any sum of two distances is
/// overflow-free in 32 bits.
inline constexpr VertexId kMaxVertices = 1u << 20;

/// Simple undirected graph. Vertices carry external string labels; internal
/// ids are dense and 0-based, assigned by first appearance in the input.
/// Instances are immutable after construction: build them through
/// Graph::from_edges or the parsers/generators, never mutate the fields.
struct Graph {
    std::vector<std::string> labels;            // unique, index = internal id
    std::vector<std::vector<VertexId>> adj;     // sorted ascending, symmetric
    std::size_t edge_count = 0;

    VertexId vertex_count() const { return static_cast<VertexId>(labels.size()); }

    bool has_edge(VertexId u, VertexId v) const;
    const std::string& label(VertexId v) const { return labels[v]; }
    std::optional<VertexId> find_label(std::string_view label) const;
    std::size_t degree(VertexId v) const { return adj[v].size(); }

    /// Canonical constructor: validates labels (unique, non-empty, no
    /// whitespace), rejects self-loops, collapses duplicate edges silently
    /// and produces sorted adjacency lists.
    static Graph from_edges(std::vector<std::string> labels,
                            const std::vector<std::pair<VertexId, VertexId>>& edges);
};

/// Parses the plain edge-list format: one edge per line as two
/// whitespace-separated labels, '#' starts a comment line, blank lines are
/// ignored. Duplicate edges collapse with a warning on `diag`.
Graph parse_edge_list(std::istream& in, std::ostream* diag = nullptr);

/// Parses DIMACS: "p edge n m" header, "e i j" edges with 1-based indices,
/// "c" comment lines. Vertex labels become "1".."n".
Graph parse_dimacs(std::istream& in, std::ostream* diag = nullptr);

/// Emits the canonical edge-list: one edge per line, sorted by
/// (min id, max id), labels as stored.
void write_edge_list(const Graph& g, std::ostream& out);

/// Induced subgraph on a sorted set of vertices; labels are inherited.
/// The result may be disconnected.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> s);

/// Replaces every edge by a path of t edges (t-1 fresh internal vertices);
/// t = 1 returns an isomorphic copy. Original vertices keep their ids.
Graph subdivide(const Graph& g, std::uint32_t t);

bool is_connected(const Graph& g);

} // namespace treelike
