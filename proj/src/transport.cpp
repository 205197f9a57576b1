#include "wgm/transport.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wgm {

namespace {

std::string bond_label(int i) {
    return "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")";
}

} // namespace

TransportReport check_bond_pair_transport(const SLabeledGraph& g) {
    TransportReport rep;
    CoxeterTypeA cox = g.coxeter();
    struct Rec {
        int x, y; // i-side, j-side
    };
    std::map<int, std::vector<Rec>> recs;
    for (int u = 0; u < g.size(); ++u)
        for (auto [v, wt] : g.out_edges(u)) {
            if (u > v || !is_simple_edge(g, u, v)) continue;
            for (auto [i, j] : cox.bonds()) {
                if (!activates(g, u, v, i, j)) continue;
                int x = g.tau(u).contains(i) ? u : v;
                recs[i].push_back({x, x == u ? v : u});
            }
        }
    for (const auto& [bond, list] : recs)
        for (const Rec& r1 : list)
            for (const Rec& r2 : list) {
                if (r1.x == r2.x) continue;
                for (int k : cox.generators()) {
                    if (!g.tau(r1.x).contains(k) || !g.tau(r1.y).contains(k) ||
                        g.tau(r2.x).contains(k) || g.tau(r2.y).contains(k))
                        continue;
                    ++rep.instances;
                    if (g.weight(r1.x, r2.x) != g.weight(r1.y, r2.y))
                        rep.violations.push_back(
                            {{g.id(r1.x), g.id(r1.y), g.id(r2.x), g.id(r2.y)},
                             "bond " + bond_label(bond) + ": cross weights " +
                                 std::to_string(g.weight(r1.x, r2.x)) + " vs " +
                                 std::to_string(g.weight(r1.y, r2.y))});
                    break; // the conclusion does not depend on which k separates
                }
            }
    return rep;
}

namespace {

void check_single_path_instance(const SLabeledGraph& h, int u, int v, int i, int j, int r,
                                TransportReport& rep) {
    auto pij = alternating_paths(h, u, v, i, j, r);
    auto pji = alternating_paths(h, u, v, j, i, r);
    if (pij.size() > 1 || pji.size() > 1 || pij.size() + pji.size() == 0) return;
    ++rep.instances;
    long long a = alternating_path_count(h, u, v, i, j, r);
    long long b = alternating_path_count(h, u, v, j, i, r);
    if (a != b)
        rep.violations.push_back({{h.id(u), h.id(v)},
                                  "orders (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") at length " + std::to_string(r) + ": " +
                                      std::to_string(a) + " vs " + std::to_string(b)});
}

TransportReport window_transport(const SLabeledGraph& g, int width) {
    TransportReport rep;
    CoxeterTypeA cox = g.coxeter();
    for (int c = 1; c + width - 1 <= g.rank(); ++c) {
        TauSet window;
        bool live = true;
        for (int t = 0; t < width; ++t) {
            live = live && cox.is_active(c + t);
            if (live) window = window.with(c + t);
        }
        if (!live) continue;
        SLabeledGraph h = g.restricted(window);
        for (int u = 0; u < h.size(); ++u)
            for (int v = 0; v < h.size(); ++v) {
                if (u == v || h.tau(v).diff(h.tau(u)).empty()) continue;
                TauSet have = h.tau(u).diff(h.tau(v));
                if (width == 3) {
                    std::vector<int> gens = window.to_list();
                    for (std::size_t p = 0; p < gens.size(); ++p)
                        for (std::size_t q = p + 1; q < gens.size(); ++q) {
                            int i = gens[p], j = gens[q];
                            if (!have.contains(i) || !have.contains(j)) continue;
                            check_single_path_instance(h, u, v, i, j, 2, rep);
                        }
                } else {
                    int k = c, i = c + 1, j = c + 2, l = c + 3;
                    TauSet want = h.tau(v).diff(h.tau(u));
                    if (have.contains(i) && have.contains(j) && want.contains(k) &&
                        want.contains(l))
                        check_single_path_instance(h, u, v, i, j, 3, rep);
                }
            }
    }
    return rep;
}

} // namespace

TransportReport check_window3_transport(const SLabeledGraph& g) { return window_transport(g, 3); }

TransportReport check_window4_transport(const SLabeledGraph& g) { return window_transport(g, 4); }

TransportReport audit_alternating_paths(const SLabeledGraph& g) {
    TransportReport rep;
    CoxeterTypeA cox = g.coxeter();
    auto audit = [&](int u, int v, int i, int j, int r) {
        for (const auto& path : alternating_paths(g, u, v, i, j, r)) {
            ++rep.instances;
            int arcs = 0;
            bool interior = false;
            for (std::size_t t = 0; t + 1 < path.size(); ++t) {
                EdgeKind kind = edge_kind(g, path[t], path[t + 1]);
                if (kind != EdgeKind::Simple) {
                    ++arcs;
                    if (t != 0 && t + 2 != path.size()) interior = true;
                }
            }
            if (arcs > 1 || interior)
                rep.violations.push_back({{g.id(u), g.id(v)},
                                          "path with " + std::to_string(arcs) + " arcs" +
                                              (interior ? ", one interior" : "")});
        }
    };
    std::vector<int> gens = cox.generators();
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v) {
            if (u == v || g.tau(v).diff(g.tau(u)).empty()) continue;
            TauSet have = g.tau(u).diff(g.tau(v));
            TauSet want = g.tau(v).diff(g.tau(u));
            for (std::size_t p = 0; p < gens.size(); ++p)
                for (std::size_t q = p + 1; q < gens.size(); ++q) {
                    int i = gens[p], j = gens[q];
                    if (!have.contains(i) || !have.contains(j)) continue;
                    audit(u, v, i, j, 2);
                    audit(u, v, j, i, 2);
                }
            for (const auto& quad : cox.a4_paths()) {
                int k = quad[0], i = quad[1], j = quad[2], l = quad[3];
                if (!have.contains(i) || !have.contains(j) || !want.contains(k) ||
                    !want.contains(l))
                    continue;
                audit(u, v, i, j, 3);
                audit(u, v, j, i, 3);
            }
        }
    return rep;
}

CablingReport check_submolecule_cabling(const SLabeledGraph& g) {
    CablingReport rep;
    std::vector<int> gens = g.active().to_list();
    if (gens.empty()) return rep;
    int top = gens.back();
    TauSet j1 = g.active().without(top);
    TauSet j2 = gens.size() >= 2 ? j1.without(gens[gens.size() - 2]) : j1;
    SLabeledGraph r1 = g.restricted(j1);
    SLabeledGraph r2 = g.restricted(j2);
    auto comp1 = simple_component_sets(r1);
    auto comp2 = simple_component_sets(r2);
    std::vector<int> c1(g.size(), -1), c2(g.size(), -1);
    for (int c = 0; c < static_cast<int>(comp1.size()); ++c)
        for (int v : comp1[c]) c1[v] = c;
    for (int c = 0; c < static_cast<int>(comp2.size()); ++c)
        for (int v : comp2[c]) c2[v] = c;

    CoxeterTypeA cox2 = r2.coxeter();
    for (int u = 0; u < g.size(); ++u)
        for (auto [v, wt] : g.out_edges(u)) {
            if (u > v || !is_simple_edge(g, u, v) || c1[u] == c1[v]) continue;
            int x = g.tau(u).contains(top) ? u : v;
            int y = x == u ? v : u;
            if (!g.tau(x).contains(top) || g.tau(y).contains(top)) continue;
            ++rep.crossing_edges;
            auto fail = [&](const std::string& what) {
                rep.violations.push_back({{g.id(x), g.id(y)}, what});
            };
            const auto& a = comp2[c2[x]];
            const auto& b = comp2[c2[y]];
            if (a.size() != b.size()) {
                fail("submolecules of sizes " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
                continue;
            }
            std::vector<int> psi(g.size(), -1);
            psi[x] = y;
            std::vector<int> queue{x};
            bool bad = false;
            while (!queue.empty() && !bad) {
                int z = queue.back();
                queue.pop_back();
                for (auto [z2, w2] : r2.out_edges(z)) {
                    if (!is_simple_edge(r2, z, z2)) continue;
                    TauSet bonds = activated_bonds(r2, z, z2);
                    if (bonds.empty()) {
                        fail("edge " + g.id(z) + " -- " + g.id(z2) + " activates nothing");
                        bad = true;
                        break;
                    }
                    int i = bonds.to_list().front();
                    int target = -1, count = 0;
                    for (auto [w, ww] : r2.out_edges(psi[z]))
                        if (is_simple_edge(r2, psi[z], w) && activates(r2, psi[z], w, i, i + 1)) {
                            ++count;
                            target = w;
                        }
                    if (count != 1) {
                        fail("no unique matching edge at " + g.id(psi[z]) + " for bond " +
                             bond_label(i));
                        bad = true;
                        break;
                    }
                    if (psi[z2] == -1) {
                        psi[z2] = target;
                        queue.push_back(z2);
                    } else if (psi[z2] != target) {
                        fail("matching of " + g.id(z2) + " is inconsistent");
                        bad = true;
                        break;
                    }
                }
            }
            if (bad) continue;
            std::set<int> image;
            for (int z : a) {
                if (psi[z] == -1) {
                    fail("matching does not reach " + g.id(z));
                    bad = true;
                    break;
                }
                image.insert(psi[z]);
                if (c2[psi[z]] != c2[y]) {
                    fail("partner of " + g.id(z) + " leaves the far submolecule");
                    bad = true;
                    break;
                }
                if (r2.tau(z) != r2.tau(psi[z])) {
                    fail("partner of " + g.id(z) + " changes restricted tau");
                    bad = true;
                    break;
                }
            }
            if (bad) continue;
            if (image.size() != a.size()) {
                fail("matching is not injective");
                continue;
            }
            for (std::size_t p = 0; p < a.size() && !bad; ++p)
                for (std::size_t q = p + 1; q < a.size() && !bad; ++q)
                    if (is_simple_edge(r2, a[p], a[q]) !=
                        is_simple_edge(r2, psi[a[p]], psi[a[q]])) {
                        fail("matching breaks adjacency between " + g.id(a[p]) + " and " +
                             g.id(a[q]));
                        bad = true;
                    }
            if (bad) continue;
            for (int z : a)
                if (g.weight(z, psi[z]) != 1)
                    rep.violations.push_back({{g.id(z), g.id(psi[z])},
                                              "cross weight " +
                                                  std::to_string(g.weight(z, psi[z]))});
        }
    return rep;
}

} // namespace wgm
