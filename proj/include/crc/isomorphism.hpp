#pragma once

// Isomorphism testing and clique numbers for small graphs.

#include <optional>
#include <span>
#include <vector>

#include "crc/graph.hpp"

namespace crc {

inline constexpr std::size_t kMaxIsomorphismVertices = 4096;
inline constexpr std::size_t kMaxCliqueVertices = std::size_t{1} << 16;

/// An isomorphism g1 -> g2 (result[v] is the image of v), or nullopt when none
/// exists. Optional vertex colours must be preserved. Colour refinement on the
/// disjoint union, individualization and backtracking; every returned map is
/// verified edge by edge. CapacityError above kMaxIsomorphismVertices.
std::optional<std::vector<Vertex>> graph_isomorphic(const Graph& g1, const Graph& g2,
                                                    std::span<const std::uint32_t> colors1 = {},
                                                    std::span<const std::uint32_t> colors2 = {});

/// True when `map` is a bijection that carries edges onto edges.
bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const Vertex> map);

/// Clique number, by branch and bound with a greedy colouring bound.
unsigned max_clique(const Graph& g);

}  // namespace crc
