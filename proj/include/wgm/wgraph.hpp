#pragma once

#include <vector>

#include "wgm/permutation.hpp"
#include "wgm/slgraph.hpp"

namespace wgm {

// The left W-graph of S_m: one vertex per permutation (id = one-line form),
// tau the left descent set, and m(u,w) = mu(u,w) whenever tau(u) is not
// contained in tau(w), zero otherwise.
struct WGraph {
    SLabeledGraph graph;
    std::vector<Permutation> perms; // aligned with vertex indices
};

// Guarded at m <= 6 unless allow_m7; m = 7 takes minutes and real memory.
// For m <= 4 the descent-side convention is asserted against the standard
// graphs at build time.
WGraph build_left_wgraph(int m, bool allow_m7 = false);

// Strongly connected components of the nonzero-weight relation, each with
// its induced subgraph.
struct CellDecomposition {
    std::vector<std::vector<int>> cells; // vertex index sets, by least vertex
    std::vector<int> cell_of;
    std::vector<SLabeledGraph> cell_graphs;
};
CellDecomposition cells(const SLabeledGraph& g);

// Simple-edge components of every cell, internal arcs retained.
std::vector<SLabeledGraph> extract_molecules(const CellDecomposition& d);

// Fixed points of inversion in S_m, by the recurrence
// I(m) = I(m-1) + (m-1) I(m-2).
long long involution_count(int m);

} // namespace wgm
