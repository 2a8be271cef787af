#include "treelike/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <string>

#include "treelike/errors.hpp"
#include "treelike/rng.hpp"

namespace treelike {

namespace {

std::vector<std::string> numeric_labels(VertexId n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (VertexId i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

} // namespace

Graph make_path(VertexId n) {
    if (n < 1) throw InputError("path: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(numeric_labels(n), edges);
}

Graph make_cycle(VertexId n) {
    if (n < 3) throw InputError("cycle: n must be >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(numeric_labels(n), edges);
}

Graph make_clique(VertexId n) {
    if (n < 1) throw InputError("clique: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(numeric_labels(n), edges);
}

Graph make_star(VertexId n) {
    if (n < 1) throw InputError("star: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(numeric_labels(n), edges);
}

Graph make_grid(VertexId rows, VertexId cols) {
    if (rows < 1 || cols < 1) throw InputError("grid: sizes must be >= 1");
    auto id = [cols](VertexId i, VertexId j) { return i * cols + j; };
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < rows; ++i) {
        for (VertexId j = 0; j < cols; ++j) {
            if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
        }
    }
    return Graph::from_edges(numeric_labels(rows * cols), edges);
}

Graph make_diamond() {
    return Graph::from_edges(numeric_labels(4), {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph make_building(std::uint32_t k) {
    std::vector<std::string> labels;
    labels.push_back("w");
    for (std::uint32_t i = 0; i <= k; ++i) {
        labels.push_back("a" + std::to_string(i));
        labels.push_back("b" + std::to_string(i));
    }
    auto a = [](std::uint32_t i) { return static_cast<VertexId>(1 + 2 * i); };
    auto b = [](std::uint32_t i) { return static_cast<VertexId>(2 + 2 * i); };
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, a(0)}, {0, b(0)}, {a(0), b(0)}};
    for (std::uint32_t i = 1; i <= k; ++i) {
        edges.emplace_back(a(i - 1), a(i));
        edges.emplace_back(b(i - 1), b(i));
        edges.emplace_back(a(i), b(i));
    }
    return Graph::from_edges(std::move(labels), edges);
}

Graph make_house() { return make_building(1); }

Graph make_domino() {
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                                        {4, 5}, {5, 0}, {0, 3}};
    return Graph::from_edges(numeric_labels(6), edges);
}

Graph make_hole(VertexId n) {
    if (n < 5) throw InputError("hole: n must be >= 5");
    return make_cycle(n);
}

Graph make_half_grid(std::uint32_t k) {
    if (k < 1) throw InputError("halfgrid: k must be >= 1");
    std::map<std::pair<std::uint32_t, std::uint32_t>, VertexId> id;
    std::vector<std::string> labels;
    for (std::uint32_t j = 0; j <= k; ++j) {
        for (std::uint32_t i = j; i <= 2 * k - j; ++i) {
            id[{i, j}] = static_cast<VertexId>(labels.size());
            labels.push_back(std::to_string(i) + "," + std::to_string(j));
        }
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint32_t j = 0; j <= k; ++j) {
        for (std::uint32_t i = j; i <= 2 * k - j; ++i) {
            if (i + 1 <= 2 * k - j) edges.emplace_back(id[{i, j}], id[{i + 1, j}]);
            if (j + 1 <= k && i >= j + 1 && i <= 2 * k - (j + 1))
                edges.emplace_back(id[{i, j}], id[{i, j + 1}]);
        }
    }
    for (std::uint32_t j = 0; j < k; ++j) {
        edges.emplace_back(id[{j, j}], id[{j + 1, j + 1}]);             // left boundary
        edges.emplace_back(id[{2 * k - j, j}], id[{2 * k - j - 1, j + 1}]); // right boundary
    }
    return Graph::from_edges(std::move(labels), edges);
}

Graph random_connected(VertexId n, double p, std::uint64_t seed) {
    if (n < 1) throw InputError("random: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw InputError("random: p must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    for (VertexId i = 1; i < n; ++i) {
        VertexId parent = static_cast<VertexId>(rng.uniform(i));
        edges.emplace_back(parent, i);
        present[parent][i] = present[i][parent] = true;
    }
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (present[i][j]) continue;
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(numeric_labels(n), edges);
}

Graph random_chordal(VertexId n, std::uint32_t k, std::uint64_t seed) {
    if (n < 1) throw InputError("chordal: n must be >= 1");
    if (k < 1) throw InputError("chordal: k must be >= 1");
    SplitMix64 rng(seed);
    const VertexId base = std::min<VertexId>(k + 1, n);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < base; ++i)
        for (VertexId j = i + 1; j < base; ++j) edges.emplace_back(i, j);
    // All k-subsets of the base clique are attachment points.
    std::vector<std::vector<VertexId>> cliques;
    if (base > k) {
        for (VertexId skip = 0; skip < base; ++skip) {
            std::vector<VertexId> c;
            for (VertexId i = 0; i < base; ++i)
                if (i != skip) c.push_back(i);
            cliques.push_back(std::move(c));
        }
    } else if (base == k) {
        std::vector<VertexId> c(base);
        for (VertexId i = 0; i < base; ++i) c[i] = i;
        cliques.push_back(std::move(c));
    }
    for (VertexId v = base; v < n; ++v) {
        const auto& c = cliques[rng.uniform(cliques.size())];
        for (VertexId u : c) edges.emplace_back(u, v);
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            std::vector<VertexId> next;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) next.push_back(c[i]);
            next.push_back(v);
            cliques.push_back(std::move(next));
        }
    }
    return Graph::from_edges(numeric_labels(n), edges);
}

Graph random_block(VertexId n, std::uint32_t max_clique, std::uint64_t seed) {
    if (n < 1) throw InputError("block: n must be >= 1");
    if (max_clique < 2) throw InputError("block: max clique size must be >= 2");
    SplitMix64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    VertexId count = 1; // vertex 0 seeds the graph
    while (count < n) {
        std::uint32_t size = 2 + static_cast<std::uint32_t>(rng.uniform(max_clique - 1));
        VertexId fresh = std::min<VertexId>(size - 1, n - count);
        VertexId anchor = static_cast<VertexId>(rng.uniform(count));
        std::vector<VertexId> members = {anchor};
        for (VertexId i = 0; i < fresh; ++i) members.push_back(count + i);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.emplace_back(members[i], members[j]);
        count += fresh;
    }
    return Graph::from_edges(numeric_labels(n), edges);
}

Graph random_interval(VertexId n, std::uint64_t seed) {
    if (n < 1) throw InputError("interval: n must be >= 1");
    SplitMix64 rng(seed);
    constexpr int kRetries = 1000;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> iv(n);
        for (VertexId i = 0; i < n; ++i) {
            std::uint64_t a = rng.uniform(2 * static_cast<std::uint64_t>(n) + 1);
            std::uint64_t b = rng.uniform(2 * static_cast<std::uint64_t>(n) + 1);
            iv[i] = {std::min(a, b), std::max(a, b)};
        }
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = i + 1; j < n; ++j)
                if (std::max(iv[i].first, iv[j].first) <= std::min(iv[i].second, iv[j].second))
                    edges.emplace_back(i, j);
        Graph g = Graph::from_edges(numeric_labels(n), edges);
        if (is_connected(g)) return g;
    }
    throw GenerationError("interval: exhausted retries without a connected graph");
}

namespace {

struct SpecParts {
    std::string family;
    std::vector<std::string> params;
};

SpecParts split_spec(std::string_view spec) {
    SpecParts out;
    auto colon = spec.find(':');
    out.family = std::string(spec.substr(0, colon));
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            out.params.emplace_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InputError(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

double parse_prob(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw InputError("bad probability: '" + s + "'");
        return v;
    } catch (const InputError&) {
        throw;
    } catch (...) {
        throw InputError("bad probability: '" + s + "'");
    }
}

const std::array<std::string_view, 15> kFamilies = {
    "path", "cycle", "clique", "star", "grid", "halfgrid", "building", "house",
    "domino", "diamond", "hole", "random", "chordal", "block", "interval"};

} // namespace

bool looks_like_family_spec(std::string_view spec) {
    auto parts = split_spec(spec);
    return std::find(kFamilies.begin(), kFamilies.end(), parts.family) != kFamilies.end();
}

Graph generate_from_spec(std::string_view spec, std::uint64_t seed) {
    auto parts = split_spec(spec);
    auto need = [&](std::size_t n) {
        if (parts.params.size() != n)
            throw InputError("family '" + parts.family + "' expects " + std::to_string(n) +
                             " parameter(s) in '" + std::string(spec) + "'");
    };
    const std::string& f = parts.family;
    if (f == "path") { need(1); return make_path(static_cast<VertexId>(parse_u64(parts.params[0], "size"))); }
    if (f == "cycle") { need(1); return make_cycle(static_cast<VertexId>(parse_u64(parts.params[0], "size"))); }
    if (f == "clique") { need(1); return make_clique(static_cast<VertexId>(parse_u64(parts.params[0], "size"))); }
    if (f == "star") { need(1); return make_star(static_cast<VertexId>(parse_u64(parts.params[0], "size"))); }
    if (f == "grid") {
        need(2);
        return make_grid(static_cast<VertexId>(parse_u64(parts.params[0], "rows")),
                         static_cast<VertexId>(parse_u64(parts.params[1], "cols")));
    }
    if (f == "halfgrid") { need(1); return make_half_grid(static_cast<std::uint32_t>(parse_u64(parts.params[0], "k"))); }
    if (f == "building") { need(1); return make_building(static_cast<std::uint32_t>(parse_u64(parts.params[0], "k"))); }
    if (f == "house") { need(0); return make_house(); }
    if (f == "domino") { need(0); return make_domino(); }
    if (f == "diamond") { need(0); return make_diamond(); }
    if (f == "hole") { need(1); return make_hole(static_cast<VertexId>(parse_u64(parts.params[0], "size"))); }
    if (f == "random") {
        need(2);
        return random_connected(static_cast<VertexId>(parse_u64(parts.params[0], "size")),
                                parse_prob(parts.params[1]), seed);
    }
    if (f == "chordal") {
        need(2);
        return random_chordal(static_cast<VertexId>(parse_u64(parts.params[0], "size")),
                              static_cast<std::uint32_t>(parse_u64(parts.params[1], "k")), seed);
    }
    if (f == "block") {
        need(2);
        return random_block(static_cast<VertexId>(parse_u64(parts.params[0], "size")),
                            static_cast<std::uint32_t>(parse_u64(parts.params[1], "max clique")), seed);
    }
    if (f == "interval") { need(1); return random_interval(static_cast<VertexId>(parse_u64(parts.params[0], "size")), seed); }
    throw InputError("unknown generator family in '" + std::string(spec) + "'");
}

} // namespace treelike
