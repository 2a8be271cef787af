#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treelike/graph.hpp"
#include "treelike/metric.hpp"

namespace treelike {

/// Exact half-integral value stored as twice its value.
struct HalfInteger {
    std::uint64_t times2 = 0;

    bool operator==(const HalfInteger&) const = default;
    /// "3" for whole values, "7/2" for proper half-integers.
    std::string to_string() const;
};

/// Gromov hyperbolicity via the four-point condition: the maximum over
/// vertex quadruples of (largest distance sum - second largest) / 2.
/// Graphs with fewer than 4 vertices have hyperbolicity 0.
HalfInteger hyperbolicity(const DistanceMatrix& dm);

/// f(u,x,z): the maximum over shortest x-z paths P of the distance from u
/// to P. Bottleneck DP on the shortest-path DAG from x; O(n+m) per call.
/// x = z degenerates to d(u,x).
Dist max_avoiding_distance(const Graph& g, const DistanceMatrix& dm, VertexId u, VertexId x,
                           VertexId z);

/// One DP sweep computing f(u,x,z) for all z at once.
std::vector<Dist> max_avoiding_distances_from(const Graph& g, const DistanceMatrix& dm, VertexId u,
                                              VertexId x);

/// A slimness-certifying configuration: vertex u interior to a shortest
/// x-y path realizes distance delta = min(avoid_xz, avoid_yz) from the
/// union of some shortest x-z and y-z paths.
struct TriangleWitness {
    VertexId x = 0, y = 0, z = 0, u = 0;
    Dist delta = 0;
    Dist avoid_xz = 0, avoid_yz = 0;
};

struct SlimnessResult {
    Dist value = 0;
    std::optional<TriangleWitness> witness; // absent when no interior vertex exists
};

/// Exact slimness: max over ordered triples (x,y,z) with x != y (z may
/// coincide with x or y) and u interior to I(x,y) of
/// min(f(u,x,z), f(u,y,z)). The witness is the lexicographically smallest
/// (x,y,z,u) achieving the maximum. `distinct_triples_only` restricts the
/// scan to pairwise-distinct triples.
SlimnessResult slimness(const Graph& g, const DistanceMatrix& dm,
                        bool distinct_triples_only = false);

/// Slimness of one explicitly given geodesic triangle: the largest distance
/// from a vertex of one side to the union of the other two sides. Throws
/// InputError if the paths are not shortest or endpoints mismatch
/// (pxy: x->y, pxz: x->z, pyz: y->z).
Dist slim_value_of_triangle(const Graph& g, const DistanceMatrix& dm, const Path& pxy,
                            const Path& pxz, const Path& pyz);

inline constexpr std::size_t kDefaultOracleBudget = 2'000'000;

/// Independent brute-force slimness: enumerates every shortest path of every
/// pair and every geodesic triangle explicitly. Throws SizeLimitError when
/// the path count or a triangle's combination count exceeds the budget.
/// Intended for n <= 9.
Dist slimness_oracle(const Graph& g, const DistanceMatrix& dm,
                     std::size_t budget = kDefaultOracleBudget);

struct TreeLengthBounds {
    Dist lower = 0;
    Dist upper = 0;
};

/// ceil(cluster_diameter_s / 3) <= tree-length <= cluster_diameter_s + 1.
TreeLengthBounds tree_length_bounds(const Graph& g, const DistanceMatrix& dm, VertexId s);

/// Exact tree-length: minimum over elimination orderings of the largest
/// in-graph diameter of an elimination clique, memoized on the eliminated
/// vertex set. Throws SizeLimitError above max_n.
Dist exact_tree_length(const Graph& g, const DistanceMatrix& dm, VertexId max_n = 9);

/// Exact tree-breadth: same search with the covering-ball radius of each
/// elimination clique (ball centers range over all vertices).
Dist exact_tree_breadth(const Graph& g, const DistanceMatrix& dm, VertexId max_n = 9);

struct NamedBound {
    std::string name;
    std::int64_t value;
};

/// Optional exact inputs for slimness_bound_report; entries that depend on
/// them are omitted when absent.
struct BoundInputs {
    std::optional<Dist> tree_length;
    std::optional<Dist> tree_breadth;
    std::optional<int> chordality;
};

/// Every applicable upper bound on slimness with its value; the caller
/// compares them against the exact slimness.
std::vector<NamedBound> slimness_bound_report(const Graph& g, const DistanceMatrix& dm,
                                              const BoundInputs& inputs = {});

} // namespace treelike
