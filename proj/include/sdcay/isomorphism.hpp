#pragma once

#include <optional>
#include <vector>

#include "sdcay/graph.hpp"

namespace sdcay {

// Exact isomorphism test for small graphs. Returns a vertex bijection
// (map[v of g1] = v of g2) preserving adjacency exactly, or absent.
//
// Vertices are first refined by degree and distance profile, then matched by
// backtracking inside refinement classes; candidates are tried in ascending
// index order, so the witness is deterministic.
//
// Throws std::invalid_argument when either graph exceeds max_vertices.
std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2,
                                               int max_vertices = 16);

}  // namespace sdcay
