#include "treelike/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "treelike/errors.hpp"

namespace treelike {

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& nu = adj[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::optional<VertexId> Graph::find_label(std::string_view label) const {
    for (VertexId v = 0; v < vertex_count(); ++v) {
        if (labels[v] == label) return v;
    }
    return std::nullopt;
}

Graph Graph::from_edges(std::vector<std::string> labels,
                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
    const auto n = labels.size();
    if (n > kMaxVertices) {
        throw InputError("graph exceeds the supported vertex cap (" +
                         std::to_string(kMaxVertices) + ")");
    }
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw InputError("empty vertex label");
        for (char c : l) {
            if (std::isspace(static_cast<unsigned char>(c)))
                throw InputError("vertex label contains whitespace: '" + l + "'");
        }
        if (!seen.insert(l).second) throw InputError("duplicate vertex label: '" + l + "'");
    }

    Graph g;
    g.labels = std::move(labels);
    g.adj.assign(n, {});
    std::set<std::pair<VertexId, VertexId>> edge_set;
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop at vertex '" + g.labels[u] + "'");
        edge_set.insert({std::min(u, v), std::max(u, v)});
    }
    for (auto [u, v] : edge_set) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    g.edge_count = edge_set.size();
    return g;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true; // blank
}

} // namespace

Graph parse_edge_list(std::istream& in, std::ostream* diag) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;
    auto intern = [&](const std::string& s) -> VertexId {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        VertexId id = static_cast<VertexId>(labels.size());
        labels.push_back(s);
        ids.emplace(s, id);
        return id;
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<VertexId, VertexId>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b)) {
            throw InputError("line " + std::to_string(lineno) +
                             ": expected two whitespace-separated labels");
        }
        if (ls >> extra) {
            throw InputError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        }
        if (a == b) {
            throw InputError("line " + std::to_string(lineno) + ": self-loop '" + a + " " + b + "'");
        }
        VertexId u = intern(a);
        VertexId v = intern(b);
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) {
            if (diag) *diag << "warning: duplicate edge '" << a << " " << b << "' on line "
                            << lineno << " collapsed\n";
            continue;
        }
        edges.emplace_back(u, v);
    }
    if (labels.empty()) throw InputError("empty graph: no edges in input");
    return Graph::from_edges(std::move(labels), edges);
}

Graph parse_dimacs(std::istream& in, std::ostream* diag) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0, declared_m = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<VertexId, VertexId>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (have_header || !(ls >> kind >> n >> declared_m) || kind != "edge") {
                throw InputError("line " + std::to_string(lineno) + ": malformed DIMACS header");
            }
            if (n == 0) throw InputError("empty graph: DIMACS header declares 0 vertices");
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) {
                throw InputError("line " + std::to_string(lineno) + ": edge before 'p edge' header");
            }
            long long i = 0, j = 0;
            if (!(ls >> i >> j)) {
                throw InputError("line " + std::to_string(lineno) + ": malformed edge line");
            }
            if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n) {
                throw InputError("line " + std::to_string(lineno) + ": vertex index out of range");
            }
            if (i == j) throw InputError("line " + std::to_string(lineno) + ": self-loop");
            VertexId u = static_cast<VertexId>(i - 1);
            VertexId v = static_cast<VertexId>(j - 1);
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second) {
                if (diag) *diag << "warning: duplicate edge on line " << lineno << " collapsed\n";
                continue;
            }
            edges.emplace_back(u, v);
            continue;
        }
        throw InputError("line " + std::to_string(lineno) + ": unknown DIMACS line '" + tag + "'");
    }
    if (!have_header) throw InputError("missing DIMACS 'p edge' header");
    if (edges.size() != declared_m) {
        throw InputError("DIMACS edge count mismatch: header declares " +
                         std::to_string(declared_m) + ", found " + std::to_string(edges.size()) +
                         " after collapsing duplicates");
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Graph::from_edges(std::move(labels), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.adj[u]) {
            if (v > u) out << g.labels[u] << ' ' << g.labels[v] << '\n';
        }
    }
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> s) {
    if (s.empty()) throw InputError("induced_subgraph: empty vertex set");
    std::vector<std::string> labels;
    labels.reserve(s.size());
    std::unordered_map<VertexId, VertexId> remap;
    for (VertexId v : s) {
        if (v >= g.vertex_count()) throw InputError("induced_subgraph: vertex id out of range");
        if (!remap.emplace(v, static_cast<VertexId>(labels.size())).second) {
            throw InputError("induced_subgraph: duplicate vertex in set");
        }
        labels.push_back(g.labels[v]);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v : s) {
        for (VertexId w : g.adj[v]) {
            auto it = remap.find(w);
            if (it != remap.end() && w > v) edges.emplace_back(remap[v], it->second);
        }
    }
    return Graph::from_edges(std::move(labels), edges);
}

Graph subdivide(const Graph& g, std::uint32_t t) {
    if (t < 1) throw InputError("subdivide: t must be >= 1");
    std::vector<std::string> labels = g.labels;
    std::set<std::string> used(labels.begin(), labels.end());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.adj[u]) {
            if (v < u) continue;
            VertexId prev = u;
            for (std::uint32_t k = 1; k < t; ++k) {
                std::string name = g.labels[u] + "|" + g.labels[v] + "|" + std::to_string(k);
                while (used.count(name)) name += "'";
                used.insert(name);
                VertexId id = static_cast<VertexId>(labels.size());
                labels.push_back(name);
                edges.emplace_back(prev, id);
                prev = id;
            }
            edges.emplace_back(prev, v);
        }
    }
    return Graph::from_edges(std::move(labels), edges);
}

bool is_connected(const Graph& g) {
    const VertexId n = g.vertex_count();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = true;
    VertexId reached = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

} // namespace treelike
