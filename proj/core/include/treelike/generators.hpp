#pragma once

#include <cstdint>
#include <string_view>

#include "treelike/graph.hpp"

namespace treelike {

// Deterministic families. Labels are "0".."n-1" unless noted.
Graph make_path(VertexId n);
Graph make_cycle(VertexId n);   // n >= 3
Graph make_clique(VertexId n);
Graph make_star(VertexId n);    // vertex 0 is the center
Graph make_grid(VertexId rows, VertexId cols);

// Fixed patterns.
Graph make_diamond();                 // K_4 minus one edge
Graph make_building(std::uint32_t k); // chain of k 4-cycles ending in a triangle;
                                      // labels "w", "a0", "b0", ..., "ak", "bk"
Graph make_house();                   // building(1)
Graph make_domino();                  // 6-cycle plus one chord (two 4-cycles)
Graph make_hole(VertexId n);          // cycle, n >= 5

/// Triangular half of a rectilinear grid: rows j = 0..k, row j spanning
/// columns j..2k-j, with unit horizontal/vertical edges plus diagonal edges
/// along both slanted boundaries. Labels "i,j". Corners: "0,0", "2k,0",
/// apex "k,k".
Graph make_half_grid(std::uint32_t k);

// Seeded random families; identical seeds give byte-identical graphs.
Graph random_connected(VertexId n, double p, std::uint64_t seed);
Graph random_chordal(VertexId n, std::uint32_t k, std::uint64_t seed);
Graph random_block(VertexId n, std::uint32_t max_clique, std::uint64_t seed);
Graph random_interval(VertexId n, std::uint64_t seed);

/// True when the string names a generator family ("cycle:8", "house", ...).
bool looks_like_family_spec(std::string_view spec);

/// Builds the graph named by a family spec. The seed only matters for the
/// random families.
Graph generate_from_spec(std::string_view spec, std::uint64_t seed);

} // namespace treelike
