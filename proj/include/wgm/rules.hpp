#pragma once

#include <string>
#include <vector>

#include "wgm/slgraph.hpp"

namespace wgm {

enum class Rule { Adm1, Adm2, Adm3, SR, CR, BR, LPR2, LPR3 };

const char* rule_name(Rule r);

struct RuleWitness {
    std::vector<std::string> vertices;
    std::string detail;
};

struct RuleReport {
    Rule rule;
    std::vector<RuleWitness> witnesses;
    bool pass() const { return witnesses.empty(); }
};

struct RuleSet {
    bool sr = false, cr = false, br = false, lpr2 = false, lpr3 = false;
    static RuleSet all() { return {true, true, true, true, true}; }
};

// The three admissibility conditions: bipartite support, no edge out of a
// tau-subset, symmetric weights on incomparable pairs.
std::vector<RuleReport> check_admissible(const SLabeledGraph& g);
bool is_admissible(const SLabeledGraph& g);

// SR, CR, BR and the local polygon rules, quantified over the graph's active
// generators.  One report per requested rule, in fixed order.
std::vector<RuleReport> check_molecular(const SLabeledGraph& g, RuleSet rules = RuleSet::all());
bool is_molecular(const SLabeledGraph& g);

} // namespace wgm
