#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wgm/partition.hpp"
#include "wgm/rules.hpp"
#include "wgm/scgraph.hpp"
#include "wgm/slgraph.hpp"
#include "wgm/tableau.hpp"

namespace wgm {

// The standard graph of the shape: vertices the standard tableaux of shape
// lambda |- m, tau the descent sets, one edge per dual Knuth exchange with
// beta read off the endpoint tau-sets.  Generator rank m-1.
SignedColoredGraph standard_deg(const Partition& shape);

struct DegAxiomReport {
    int axiom = 0; // 1..6
    std::vector<RuleWitness> witnesses;
    bool pass() const { return witnesses.empty(); }
};

// Dual equivalence axioms 1..upto on a signed colored graph.  1-5 are local
// (the weak axioms); 6 is the connectivity axiom.
std::vector<DegAxiomReport> check_deg_axioms(const SignedColoredGraph& g, int upto = 6);
bool is_weak_deg(const SignedColoredGraph& g); // axioms 1-5
bool is_deg(const SignedColoredGraph& g);      // axioms 1-6

// Colors {a_lo .. a_lo+width-1}: connected components over the edges whose
// beta meets the window, and a canonical form of one component as an
// edge-colored graph (tau ignored, colors relabeled to 1..width).
std::vector<std::vector<int>> window_component_sets(const SignedColoredGraph& g, int lo,
                                                    int width);
std::string canonical_window_string(const SignedColoredGraph& g, const std::vector<int>& comp,
                                    int lo, int width);

// Canonical forms of the standard graphs on 4 letters (width 2) or 5 letters
// (width 3), the shapes window components must take.
struct WindowCatalog {
    int width = 0;
    std::vector<std::string> shapes;
    int max_size = 0; // vertices of the largest shape
};
const WindowCatalog& window_catalog(int width);

// tau cap {1..k-1} and beta cap {a_1..a_{k-2}}, edges left with empty beta
// dropped; the result has type rank k.  Requires 1 <= k <= type_rank.
struct ScgRestriction {
    SignedColoredGraph graph;
    std::vector<std::vector<int>> component_vertex_sets;
    std::vector<SignedColoredGraph> components;
};
ScgRestriction restrict_scg(const SignedColoredGraph& g, int k);

// Locate the standard graph the input maps onto: a surjection preserving tau
// that sends each edge to an edge whose beta contains the source beta.
struct MorphismResult {
    enum class Status { Ok, NotWeakDeg, NoMorphism };
    Status status = Status::NoMorphism;
    Partition shape;                // target shape, when found
    std::vector<std::string> image; // image[v] = target vertex id, aligned with g
    bool is_isomorphism = false;
};
MorphismResult morphism_to_standard(const SignedColoredGraph& g);

// The simple part of a labeled graph as a signed colored graph: one edge per
// simple edge, beta its activated bonds.
SignedColoredGraph simple_part_scg(const SLabeledGraph& g);

// The labeled graph with m(u,v) = m(v,u) = 1 for every edge.
SLabeledGraph scg_to_slabeled(const SignedColoredGraph& g);

} // namespace wgm
