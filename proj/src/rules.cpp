#include "wgm/rules.hpp"

#include <algorithm>

namespace wgm {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Adm1: return "admissibility-1";
        case Rule::Adm2: return "admissibility-2";
        case Rule::Adm3: return "admissibility-3";
        case Rule::SR: return "SR";
        case Rule::CR: return "CR";
        case Rule::BR: return "BR";
        case Rule::LPR2: return "LPR2";
        case Rule::LPR3: return "LPR3";
    }
    return "?";
}

namespace {

RuleWitness edge_witness(const SLabeledGraph& g, int u, int v, std::string detail) {
    return {{g.id(u), g.id(v)}, std::move(detail)};
}

void check_bipartite(const SLabeledGraph& g, RuleReport& rep) {
    std::vector<int> color(g.size(), -1);
    for (int s = 0; s < g.size(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            auto visit = [&](int v) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    rep.witnesses.push_back(edge_witness(
                        g, u, v, "edge closes an odd cycle in the nonzero-weight support"));
                }
            };
            for (auto [v, w] : g.out_edges(u)) (void)w, visit(v);
            for (auto [v, w] : g.in_edges(u)) (void)w, visit(v);
        }
    }
}

} // namespace

std::vector<RuleReport> check_admissible(const SLabeledGraph& g) {
    RuleReport r1{Rule::Adm1, {}}, r2{Rule::Adm2, {}}, r3{Rule::Adm3, {}};
    check_bipartite(g, r1);
    for (int u = 0; u < g.size(); ++u) {
        for (auto [v, w] : g.out_edges(u)) {
            if (g.tau(u).subset_of(g.tau(v)))
                r2.witnesses.push_back(edge_witness(
                    g, u, v, "m = " + std::to_string(w) + " with tau(u) within tau(v)"));
            if (g.tau(u).incomparable(g.tau(v)) && w != g.weight(v, u))
                r3.witnesses.push_back(edge_witness(
                    g, u, v,
                    "incomparable tau but m(u,v) = " + std::to_string(w) +
                        ", m(v,u) = " + std::to_string(g.weight(v, u))));
        }
    }
    return {r1, r2, r3};
}

bool is_admissible(const SLabeledGraph& g) {
    for (const auto& r : check_admissible(g))
        if (!r.pass()) return false;
    return true;
}

namespace {

void check_sr(const SLabeledGraph& g, RuleReport& rep) {
    for (int u = 0; u < g.size(); ++u)
        for (auto [v, w] : g.out_edges(u)) {
            if (u > v || !is_simple_edge(g, u, v)) continue;
            long long wv = g.weight(v, u);
            if (w != 1 || wv != 1)
                rep.witnesses.push_back(edge_witness(g, u, v,
                                                     "simple edge with weights " +
                                                         std::to_string(w) + ", " +
                                                         std::to_string(wv)));
        }
}

void check_cr(const SLabeledGraph& g, RuleReport& rep) {
    auto cox = g.coxeter();
    for (int u = 0; u < g.size(); ++u)
        for (auto [v, w] : g.out_edges(u)) {
            (void)w;
            for (int i : g.tau(u).diff(g.tau(v)).to_list())
                for (int j : g.tau(v).diff(g.tau(u)).to_list())
                    if (!cox.bonded(i, j))
                        rep.witnesses.push_back(
                            edge_witness(g, u, v,
                                         "unbonded pair " + std::to_string(i) + ", " +
                                             std::to_string(j) + " across the edge"));
        }
}

void check_br(const SLabeledGraph& g, RuleReport& rep) {
    auto bonds = g.coxeter().bonds();
    for (int u = 0; u < g.size(); ++u) {
        for (auto [i, j] : bonds) {
            if (g.tau(u).contains(i) == g.tau(u).contains(j)) continue;
            int count = 0;
            for (auto [v, w] : g.out_edges(u)) {
                (void)w;
                if (is_simple_edge(g, u, v) && activates(g, u, v, i, j)) ++count;
            }
            // Arcs never activate: their endpoints have comparable tau-sets.
            if (count != 1)
                rep.witnesses.push_back(
                    {{g.id(u)},
                     "bond (" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                         std::to_string(count) + " activating edges"});
        }
    }
}

void check_lpr2(const SLabeledGraph& g, RuleReport& rep) {
    auto gens = g.active().to_list();
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v) {
            if (u == v) continue;
            if (g.tau(v).diff(g.tau(u)).empty()) continue;
            for (size_t a = 0; a < gens.size(); ++a)
                for (size_t b = a + 1; b < gens.size(); ++b) {
                    int i = gens[a], j = gens[b];
                    if (!g.tau(u).contains(i) || !g.tau(u).contains(j)) continue;
                    if (g.tau(v).contains(i) || g.tau(v).contains(j)) continue;
                    long long nij = alternating_path_count(g, u, v, i, j, 2);
                    long long nji = alternating_path_count(g, u, v, j, i, 2);
                    if (nij != nji)
                        rep.witnesses.push_back(edge_witness(
                            g, u, v,
                            "N2_{" + std::to_string(i) + std::to_string(j) + "} = " +
                                std::to_string(nij) + " vs N2_{" + std::to_string(j) +
                                std::to_string(i) + "} = " + std::to_string(nji)));
                }
        }
}

void check_lpr3(const SLabeledGraph& g, RuleReport& rep) {
    for (auto [k, i, j, l] : g.coxeter().a4_paths()) {
        for (int u = 0; u < g.size(); ++u) {
            TauSet tu = g.tau(u);
            if (!tu.contains(i) || !tu.contains(j) || tu.contains(k) || tu.contains(l))
                continue;
            for (int v = 0; v < g.size(); ++v) {
                TauSet tv = g.tau(v);
                if (tv.contains(i) || tv.contains(j) || !tv.contains(k) || !tv.contains(l))
                    continue;
                long long nij = alternating_path_count(g, u, v, i, j, 3);
                long long nji = alternating_path_count(g, u, v, j, i, 3);
                if (nij != nji)
                    rep.witnesses.push_back(edge_witness(
                        g, u, v,
                        "quadruple " + std::to_string(k) + "-" + std::to_string(i) + "-" +
                            std::to_string(j) + "-" + std::to_string(l) + ": N3 " +
                            std::to_string(nij) + " vs " + std::to_string(nji)));
            }
        }
    }
}

} // namespace

std::vector<RuleReport> check_molecular(const SLabeledGraph& g, RuleSet rules) {
    std::vector<RuleReport> out;
    if (rules.sr) {
        RuleReport r{Rule::SR, {}};
        check_sr(g, r);
        out.push_back(std::move(r));
    }
    if (rules.cr) {
        RuleReport r{Rule::CR, {}};
        check_cr(g, r);
        out.push_back(std::move(r));
    }
    if (rules.br) {
        RuleReport r{Rule::BR, {}};
        check_br(g, r);
        out.push_back(std::move(r));
    }
    if (rules.lpr2) {
        RuleReport r{Rule::LPR2, {}};
        check_lpr2(g, r);
        out.push_back(std::move(r));
    }
    if (rules.lpr3) {
        RuleReport r{Rule::LPR3, {}};
        check_lpr3(g, r);
        out.push_back(std::move(r));
    }
    return out;
}

bool is_molecular(const SLabeledGraph& g) {
    if (!is_admissible(g)) return false;
    for (const auto& r : check_molecular(g))
        if (!r.pass()) return false;
    return true;
}

} // namespace wgm
