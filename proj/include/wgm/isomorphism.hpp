#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wgm/slgraph.hpp"

namespace wgm {

// Backtracking vertex-bijection search.  `compatible(u, h)` prefilters images
// of u; `consistent(map, u, h)` checks u -> h against the already-placed part
// of the map (map[v] == -1 when v is unplaced).
std::optional<std::vector<int>> find_vertex_bijection(
    int size_g, int size_h, const std::function<bool(int, int)>& compatible,
    const std::function<bool(const std::vector<int>&, int, int)>& consistent);

// Bijection preserving tau exactly and every ordered pair weight.
std::optional<std::vector<int>> find_isomorphism(const SLabeledGraph& g,
                                                 const SLabeledGraph& h);

// Bijection preserving tau and simple-edge adjacency, ignoring arcs and
// weights: the molecule-classification notion.
std::optional<std::vector<int>> find_simple_part_isomorphism(const SLabeledGraph& g,
                                                             const SLabeledGraph& h);

} // namespace wgm
