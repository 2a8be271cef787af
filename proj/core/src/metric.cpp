#include "treelike/metric.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "treelike/errors.hpp"

namespace treelike {

namespace {

constexpr Dist kUnreached = std::numeric_limits<Dist>::max();

std::vector<Dist> bfs_raw(const Graph& g, VertexId s) {
    std::vector<Dist> dist(g.vertex_count(), kUnreached);
    std::queue<VertexId> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.adj[v]) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

} // namespace

std::vector<Dist> bfs_distances(const Graph& g, VertexId s) {
    auto dist = bfs_raw(g, s);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] == kUnreached) {
            throw PreconditionError("graph is disconnected: vertex '" + g.labels[v] +
                                    "' is unreachable from '" + g.labels[s] + "'");
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const VertexId n = g.vertex_count();
    DistanceMatrix dm(n);
    for (VertexId s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (VertexId v = 0; v < n; ++v) dm.set(s, v, dist[v]);
    }
    return dm;
}

VertexSubset interval(const DistanceMatrix& dm, VertexId u, VertexId v) {
    VertexSubset out;
    const Dist duv = dm.at(u, v);
    for (VertexId z = 0; z < dm.size(); ++z) {
        if (dm.at(u, z) + dm.at(z, v) == duv) out.push_back(z);
    }
    return out;
}

VertexSubset ball(const DistanceMatrix& dm, VertexId s, Dist r) {
    VertexSubset out;
    for (VertexId v = 0; v < dm.size(); ++v) {
        if (dm.at(s, v) <= r) out.push_back(v);
    }
    return out;
}

Dist eccentricity(const DistanceMatrix& dm, VertexId v) {
    Dist e = 0;
    for (VertexId u = 0; u < dm.size(); ++u) e = std::max(e, dm.at(v, u));
    return e;
}

Dist radius(const DistanceMatrix& dm) {
    Dist r = std::numeric_limits<Dist>::max();
    for (VertexId v = 0; v < dm.size(); ++v) r = std::min(r, eccentricity(dm, v));
    return r;
}

Dist diameter(const DistanceMatrix& dm) {
    Dist d = 0;
    for (VertexId v = 0; v < dm.size(); ++v) d = std::max(d, eccentricity(dm, v));
    return d;
}

bool is_isometric_subset(const Graph& g, const DistanceMatrix& dm, std::span<const VertexId> s) {
    Graph h = induced_subgraph(g, s);
    if (!is_connected(h)) return false;
    DistanceMatrix hm = all_pairs_distances(h);
    for (VertexId i = 0; i < h.vertex_count(); ++i) {
        for (VertexId j = i + 1; j < h.vertex_count(); ++j) {
            if (hm.at(i, j) != dm.at(s[i], s[j])) return false;
        }
    }
    return true;
}

} // namespace treelike
