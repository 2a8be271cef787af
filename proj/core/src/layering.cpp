#include "treelike/layering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include "treelike/errors.hpp"

namespace treelike {

namespace {

struct UnionFind {
    std::vector<VertexId> parent;
    explicit UnionFind(VertexId n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    VertexId find(VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

LayeringPartition layering_partition(const Graph& g, const DistanceMatrix& dm, VertexId s) {
    const VertexId n = g.vertex_count();
    auto dist = bfs_distances(g, s);
    const Dist r = *std::max_element(dist.begin(), dist.end());

    std::vector<std::vector<VertexId>> by_layer(r + 1);
    for (VertexId v = 0; v < n; ++v) by_layer[dist[v]].push_back(v);

    LayeringPartition lp;
    lp.source = s;
    lp.layers.resize(r + 1);
    lp.cluster_of.assign(n, {0, 0});

    // Sweep layers from the outermost inward, activating vertices of
    // distance >= i and reading each layer's connected components off a
    // union-find over the active set.
    UnionFind uf(n);
    std::vector<bool> active(n, false);
    for (std::uint32_t i = r + 1; i-- > 0;) {
        for (VertexId v : by_layer[i]) {
            active[v] = true;
            for (VertexId w : g.adj[v]) {
                if (active[w]) uf.unite(v, w);
            }
        }
        std::map<VertexId, std::vector<VertexId>> groups; // component root -> members
        for (VertexId v : by_layer[i]) groups[uf.find(v)].push_back(v);
        std::vector<VertexSubset> clusters;
        for (auto& [root, members] : groups) {
            std::sort(members.begin(), members.end());
            clusters.push_back(std::move(members));
        }
        // cluster order within a layer: by smallest member id
        std::sort(clusters.begin(), clusters.end(),
                  [](const VertexSubset& a, const VertexSubset& b) { return a.front() < b.front(); });
        for (auto& members : clusters) {
            std::uint32_t idx = static_cast<std::uint32_t>(lp.layers[i].size());
            for (VertexId v : members) lp.cluster_of[v] = {i, idx};
            lp.layers[i].push_back(std::move(members));
        }
    }
    return lp;
}

LayeringTree layering_tree(const Graph& g, const LayeringPartition& lp) {
    LayeringTree lt;
    std::map<ClusterId, std::size_t> node_index;
    for (std::uint32_t i = 0; i < lp.layers.size(); ++i) {
        for (std::uint32_t j = 0; j < lp.layers[i].size(); ++j) {
            node_index[{i, j}] = lt.nodes.size();
            lt.nodes.push_back({i, j});
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.adj[u]) {
            if (v < u) continue;
            ClusterId cu = lp.cluster_of[u];
            ClusterId cv = lp.cluster_of[v];
            if (cu == cv) continue;
            std::size_t a = node_index[cu];
            std::size_t b = node_index[cv];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    lt.edges.assign(edges.begin(), edges.end());

    // Tree invariants: |E| = |V| - 1 and connected; an intra-layer edge
    // between different clusters is likewise impossible by construction.
    if (lt.edges.size() + 1 != lt.nodes.size())
        throw std::logic_error("layering tree invariant violated: edge count");
    std::vector<std::vector<std::size_t>> tadj(lt.nodes.size());
    for (auto [a, b] : lt.edges) {
        if (lt.nodes[a].first + 1 != lt.nodes[b].first && lt.nodes[b].first + 1 != lt.nodes[a].first)
            throw std::logic_error("layering tree invariant violated: non-consecutive layers");
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    std::vector<bool> seen(lt.nodes.size(), false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : tadj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != lt.nodes.size())
        throw std::logic_error("layering tree invariant violated: disconnected");
    return lt;
}

Dist cluster_diameter_at(const DistanceMatrix& dm, const LayeringPartition& lp) {
    Dist best = 0;
    for (const auto& layer : lp.layers) {
        for (const auto& cluster : layer) {
            for (std::size_t i = 0; i < cluster.size(); ++i)
                for (std::size_t j = i + 1; j < cluster.size(); ++j)
                    best = std::max(best, dm.at(cluster[i], cluster[j]));
        }
    }
    return best;
}

namespace {

template <typename Better>
ClusterDiameterExtremum scan_starts(const Graph& g, const DistanceMatrix& dm, Better better) {
    ClusterDiameterExtremum ext;
    bool first = true;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        Dist d = cluster_diameter_at(dm, layering_partition(g, dm, s));
        if (first || better(d, ext.value)) {
            ext = {d, s};
            first = false;
        }
    }
    return ext;
}

} // namespace

ClusterDiameterExtremum cluster_diameter_min(const Graph& g, const DistanceMatrix& dm) {
    return scan_starts(g, dm, [](Dist a, Dist b) { return a < b; });
}

ClusterDiameterExtremum cluster_diameter_max(const Graph& g, const DistanceMatrix& dm) {
    return scan_starts(g, dm, [](Dist a, Dist b) { return a > b; });
}

void write_layering_dot(const Graph& g, const LayeringPartition& lp, const LayeringTree& lt,
                        std::ostream& out) {
    out << "graph layering {\n";
    for (auto [i, j] : lt.nodes) {
        std::vector<std::string> members;
        for (VertexId v : lp.layers[i][j]) members.push_back(g.labels[v]);
        std::sort(members.begin(), members.end());
        out << "  c" << i << "_" << j << " [label=\"";
        for (std::size_t k = 0; k < members.size(); ++k) {
            if (k) out << ' ';
            out << members[k];
        }
        out << "\"];\n";
    }
    for (auto [a, b] : lt.edges) {
        out << "  c" << lt.nodes[a].first << "_" << lt.nodes[a].second << " -- c"
            << lt.nodes[b].first << "_" << lt.nodes[b].second << ";\n";
    }
    out << "}\n";
}

} // namespace treelike
