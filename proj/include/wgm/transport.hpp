#pragma once

#include <vector>

#include "wgm/rules.hpp"
#include "wgm/slgraph.hpp"

namespace wgm {

struct TransportReport {
    long long instances = 0;
    std::vector<RuleWitness> violations;
    bool pass() const { return violations.empty(); }
};

// Two simple edges activating the same bond (i,j), oriented so i sits in the
// tau of x and x', with a generator k in tau(x) and tau(y) but in neither
// tau(x') nor tau(y'): then m(x,x') must equal m(y,y').
TransportReport check_bond_pair_transport(const SLabeledGraph& g);

// On every restriction to 3 (resp. 4) consecutive active generators, each
// polygon-rule instance whose two alternating path sets are singletons at
// most must balance exactly.
TransportReport check_window3_transport(const SLabeledGraph& g);
TransportReport check_window4_transport(const SLabeledGraph& g);

// Every alternating path feeding a polygon rule: interior edges simple, at
// most one arc overall.
TransportReport audit_alternating_paths(const SLabeledGraph& g);

struct CablingReport {
    long long crossing_edges = 0;
    std::vector<RuleWitness> violations;
    bool pass() const { return violations.empty(); }
};

// For each simple edge joining two different submolecules of the restriction
// dropping the top generator: match the two submolecules one level further
// down through forced activating edges, require the matching to be a
// tau-respecting simple-part isomorphism, and require unit weight from each
// vertex to its partner.
CablingReport check_submolecule_cabling(const SLabeledGraph& g);

} // namespace wgm
