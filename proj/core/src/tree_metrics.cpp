#include "treelike/tree_metrics.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>

#include "treelike/errors.hpp"
#include "treelike/layering.hpp"

namespace treelike {

std::string HalfInteger::to_string() const {
    if (times2 % 2 == 0) return std::to_string(times2 / 2);
    return std::to_string(times2) + "/2";
}

HalfInteger hyperbolicity(const DistanceMatrix& dm) {
    const VertexId n = dm.size();
    std::uint64_t best = 0;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            const std::uint64_t dab = dm.at(a, b);
            for (VertexId c = b + 1; c < n; ++c) {
                const std::uint64_t dac = dm.at(a, c);
                const std::uint64_t dbc = dm.at(b, c);
                for (VertexId d = c + 1; d < n; ++d) {
                    std::uint64_t s1 = dab + dm.at(c, d);
                    std::uint64_t s2 = dac + dm.at(b, d);
                    std::uint64_t s3 = dbc + dm.at(a, d);
                    if (s1 < s2) std::swap(s1, s2);
                    if (s1 < s3) std::swap(s1, s3);
                    best = std::max(best, s1 - std::max(s2, s3));
                }
            }
        }
    }
    return HalfInteger{best};
}

std::vector<Dist> max_avoiding_distances_from(const Graph& g, const DistanceMatrix& dm, VertexId u,
                                              VertexId x) {
    const VertexId n = g.vertex_count();
    // Vertices bucketed by distance from x; every path in the BFS DAG from
    // x to z is a shortest x-z path, so a sweep in distance order computes
    // the bottleneck value for all targets at once.
    Dist ecc = 0;
    for (VertexId v = 0; v < n; ++v) ecc = std::max(ecc, dm.at(x, v));
    std::vector<std::vector<VertexId>> buckets(ecc + 1);
    for (VertexId v = 0; v < n; ++v) buckets[dm.at(x, v)].push_back(v);

    std::vector<Dist> w(n, 0);
    w[x] = dm.at(u, x);
    for (Dist level = 1; level <= ecc; ++level) {
        for (VertexId b : buckets[level]) {
            Dist over_preds = 0;
            for (VertexId a : g.adj[b]) {
                if (dm.at(x, a) + 1 == level) over_preds = std::max(over_preds, w[a]);
            }
            w[b] = std::min(dm.at(u, b), over_preds);
        }
    }
    return w;
}

Dist max_avoiding_distance(const Graph& g, const DistanceMatrix& dm, VertexId u, VertexId x,
                           VertexId z) {
    return max_avoiding_distances_from(g, dm, u, x)[z];
}

SlimnessResult slimness(const Graph& g, const DistanceMatrix& dm, bool distinct_triples_only) {
    const VertexId n = g.vertex_count();
    SlimnessResult result;

    auto consider = [&result](Dist val, const TriangleWitness& cand) {
        if (!result.witness || val > result.value) {
            result.value = val;
            result.witness = cand;
            return;
        }
        if (val == result.value) {
            const auto& w = *result.witness;
            if (std::tie(cand.x, cand.y, cand.z, cand.u) < std::tie(w.x, w.y, w.z, w.u))
                result.witness = cand;
        }
    };

    std::vector<std::vector<Dist>> rows(n); // rows[x][z] = f(u,x,z) for the current u
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId x = 0; x < n; ++x) rows[x] = max_avoiding_distances_from(g, dm, u, x);
        for (VertexId x = 0; x < n; ++x) {
            if (result.witness && dm.at(u, x) < result.value) continue; // value <= d(u,x)
            for (VertexId y = 0; y < n; ++y) {
                if (y == x || u == x || u == y) continue;
                if (dm.at(x, u) + dm.at(u, y) != dm.at(x, y)) continue; // u interior to I(x,y)
                if (result.witness && dm.at(u, y) < result.value) continue;
                for (VertexId z = 0; z < n; ++z) {
                    if (distinct_triples_only && (z == x || z == y)) continue;
                    Dist val = std::min(rows[x][z], rows[y][z]);
                    if (result.witness && val < result.value) continue;
                    consider(val, TriangleWitness{x, y, z, u, val, rows[x][z], rows[y][z]});
                }
            }
        }
    }
    if (!result.witness) result.value = 0;
    return result;
}

namespace {

void validate_shortest_path(const Graph& g, const DistanceMatrix& dm, const Path& p,
                            const char* which) {
    if (p.empty()) throw InputError(std::string(which) + ": empty path");
    std::vector<bool> seen(g.vertex_count(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] >= g.vertex_count()) throw InputError(std::string(which) + ": vertex out of range");
        if (seen[p[i]]) throw InputError(std::string(which) + ": repeated vertex");
        seen[p[i]] = true;
        if (i > 0 && !g.has_edge(p[i - 1], p[i]))
            throw InputError(std::string(which) + ": consecutive vertices not adjacent");
    }
    if (p.size() - 1 != dm.at(p.front(), p.back()))
        throw InputError(std::string(which) + ": not a shortest path");
}

} // namespace

Dist slim_value_of_triangle(const Graph& g, const DistanceMatrix& dm, const Path& pxy,
                            const Path& pxz, const Path& pyz) {
    validate_shortest_path(g, dm, pxy, "pxy");
    validate_shortest_path(g, dm, pxz, "pxz");
    validate_shortest_path(g, dm, pyz, "pyz");
    if (pxy.front() != pxz.front() || pxy.back() != pyz.front() || pxz.back() != pyz.back())
        throw InputError("triangle endpoints mismatch (expected pxy: x->y, pxz: x->z, pyz: y->z)");

    auto side_value = [&](const Path& side, const Path& o1, const Path& o2) {
        Dist worst = 0;
        for (VertexId u : side) {
            Dist nearest = std::numeric_limits<Dist>::max();
            for (VertexId v : o1) nearest = std::min(nearest, dm.at(u, v));
            for (VertexId v : o2) nearest = std::min(nearest, dm.at(u, v));
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max({side_value(pxy, pxz, pyz), side_value(pxz, pxy, pyz),
                     side_value(pyz, pxy, pxz)});
}

namespace {

void enumerate_shortest_paths(const Graph& g, const DistanceMatrix& dm, VertexId x, VertexId y,
                              std::vector<Path>& out, std::size_t budget) {
    Path cur = {x};
    auto rec = [&](auto&& self, VertexId a) -> void {
        if (a == y) {
            if (out.size() >= budget) throw SizeLimitError("slimness oracle: path budget exceeded");
            out.push_back(cur);
            return;
        }
        for (VertexId w : g.adj[a]) {
            if (dm.at(x, w) == dm.at(x, a) + 1 && dm.at(x, w) + dm.at(w, y) == dm.at(x, y)) {
                cur.push_back(w);
                self(self, w);
                cur.pop_back();
            }
        }
    };
    rec(rec, x);
}

} // namespace

Dist slimness_oracle(const Graph& g, const DistanceMatrix& dm, std::size_t budget) {
    const VertexId n = g.vertex_count();
    // all shortest paths, per unordered pair, oriented min -> max
    std::vector<std::vector<Path>> paths(static_cast<std::size_t>(n) * n);
    std::size_t total = 0;
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x; y < n; ++y) {
            auto& list = paths[static_cast<std::size_t>(x) * n + y];
            enumerate_shortest_paths(g, dm, x, y, list, budget - total);
            total += list.size();
        }
    }
    auto paths_of = [&](VertexId a, VertexId b) -> const std::vector<Path>& {
        return paths[static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b)];
    };

    Dist best = 0;
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            for (VertexId z = 0; z < n; ++z) {
                const auto& lxy = paths_of(x, y);
                const auto& lxz = paths_of(x, z);
                const auto& lyz = paths_of(y, z);
                const std::size_t combos = lxy.size() * lxz.size() * lyz.size();
                if (combos > budget)
                    throw SizeLimitError("slimness oracle: triangle combination budget exceeded");
                for (const Path& pxy : lxy) {
                    for (const Path& pxz : lxz) {
                        for (const Path& pyz : lyz) {
                            for (std::size_t i = 1; i + 1 < pxy.size(); ++i) {
                                const VertexId u = pxy[i];
                                Dist nearest = std::numeric_limits<Dist>::max();
                                for (VertexId v : pxz) nearest = std::min(nearest, dm.at(u, v));
                                for (VertexId v : pyz) nearest = std::min(nearest, dm.at(u, v));
                                best = std::max(best, nearest);
                            }
                        }
                    }
                }
            }
        }
    }
    return best;
}

TreeLengthBounds tree_length_bounds(const Graph& g, const DistanceMatrix& dm, VertexId s) {
    Dist delta = cluster_diameter_at(dm, layering_partition(g, dm, s));
    return TreeLengthBounds{(delta + 2) / 3, delta + 1};
}

namespace {

constexpr VertexId kEliminationHardCap = 22; // memoization table is 2^n entries

// Clique formed when v is eliminated after the vertices in `mask`:
// v plus every u outside the mask reachable from v through the mask.
std::vector<VertexId> elimination_clique(const Graph& g, std::uint32_t mask, VertexId v) {
    std::vector<VertexId> clique = {v};
    std::vector<bool> visited(g.vertex_count(), false);
    visited[v] = true;
    std::vector<VertexId> stack = {v};
    while (!stack.empty()) {
        VertexId cur = stack.back();
        stack.pop_back();
        for (VertexId w : g.adj[cur]) {
            if (visited[w]) continue;
            visited[w] = true;
            if (mask & (1u << w)) {
                stack.push_back(w);
            } else {
                clique.push_back(w);
            }
        }
    }
    return clique;
}

template <typename CliqueCost>
Dist elimination_search(const Graph& g, VertexId max_n, CliqueCost cost) {
    const VertexId n = g.vertex_count();
    if (n > max_n)
        throw SizeLimitError("exact tree-length/breadth: n = " + std::to_string(n) +
                             " exceeds the cap " + std::to_string(max_n));
    if (n > kEliminationHardCap)
        throw SizeLimitError("exact tree-length/breadth: n exceeds the hard cap " +
                             std::to_string(kEliminationHardCap));
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    constexpr Dist kUnset = std::numeric_limits<Dist>::max();
    std::vector<Dist> memo(static_cast<std::size_t>(full) + 1, kUnset);
    memo[full] = 0;
    for (std::uint32_t mask = full; mask-- > 0;) {
        Dist best = kUnset;
        for (VertexId v = 0; v < n; ++v) {
            if (mask & (1u << v)) continue;
            Dist worst = std::max(cost(g, mask, v), memo[mask | (1u << v)]);
            best = std::min(best, worst);
        }
        memo[mask] = best;
    }
    return memo[0];
}

} // namespace

Dist exact_tree_length(const Graph& g, const DistanceMatrix& dm, VertexId max_n) {
    return elimination_search(g, max_n, [&dm](const Graph& gr, std::uint32_t mask, VertexId v) {
        auto clique = elimination_clique(gr, mask, v);
        Dist diam = 0;
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                diam = std::max(diam, dm.at(clique[i], clique[j]));
        return diam;
    });
}

Dist exact_tree_breadth(const Graph& g, const DistanceMatrix& dm, VertexId max_n) {
    return elimination_search(g, max_n, [&dm](const Graph& gr, std::uint32_t mask, VertexId v) {
        auto clique = elimination_clique(gr, mask, v);
        Dist best = std::numeric_limits<Dist>::max();
        for (VertexId c = 0; c < gr.vertex_count(); ++c) {
            Dist worst = 0;
            for (VertexId u : clique) worst = std::max(worst, dm.at(c, u));
            best = std::min(best, worst);
        }
        return best;
    });
}

std::vector<NamedBound> slimness_bound_report(const Graph& g, const DistanceMatrix& dm,
                                              const BoundInputs& inputs) {
    std::vector<NamedBound> out;
    const Dist dmax = cluster_diameter_max(g, dm).value;
    const Dist dmin = cluster_diameter_min(g, dm).value;
    out.push_back({"half-max-cluster-diameter", static_cast<std::int64_t>(dmax / 2)});
    out.push_back({"three-halves-min-cluster-diameter", static_cast<std::int64_t>(3 * dmin / 2)});
    if (inputs.tree_length)
        out.push_back({"three-halves-tree-length", static_cast<std::int64_t>(3 * *inputs.tree_length / 2)});
    if (inputs.tree_breadth)
        out.push_back({"triple-tree-breadth", static_cast<std::int64_t>(3 * *inputs.tree_breadth)});
    if (inputs.chordality) {
        const int k = *inputs.chordality;
        out.push_back({"quarter-chordality-plus-one", k / 4 + 1});
        if (k <= 3) out.push_back({"chordal ⇒ sl ≤ 1", 1});
        if (k <= 4) out.push_back({"four-chordal", 2});
    }
    return out;
}

} // namespace treelike
