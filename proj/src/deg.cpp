#include "wgm/deg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "wgm/errors.hpp"
#include "wgm/isomorphism.hpp"

namespace wgm {

namespace {

std::string color_label(int i) { return "a_" + std::to_string(i); }

// Components over the edges whose beta meets `colors`, optionally confined
// to `within`; singletons included, ordered by minimal vertex id.
std::vector<std::vector<int>> comps_where(const SignedColoredGraph& g, TauSet colors,
                                          const std::vector<int>* within) {
    std::vector<char> allowed(g.size(), within ? 0 : 1);
    if (within)
        for (int v : *within) allowed.at(v) = 1;
    std::vector<int> comp(g.size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.size(); ++s) {
        if (!allowed[s] || comp[s] != -1) continue;
        int ci = static_cast<int>(out.size());
        comp[s] = ci;
        std::vector<int> stack{s}, set;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            set.push_back(u);
            for (int e : g.incident(u)) {
                const auto& ed = g.edges()[e];
                if (ed.beta.intersect(colors).empty()) continue;
                int v = ed.a == u ? ed.b : ed.a;
                if (!allowed[v] || comp[v] != -1) continue;
                comp[v] = ci;
                stack.push_back(v);
            }
        }
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
    }
    auto min_id = [&](const std::vector<int>& set) {
        const std::string* best = &g.id(set.front());
        for (int v : set)
            if (g.id(v) < *best) best = &g.id(v);
        return *best;
    };
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return min_id(a) < min_id(b); });
    return out;
}

std::vector<std::string> comp_ids(const SignedColoredGraph& g, const std::vector<int>& comp) {
    std::vector<std::string> ids;
    for (int v : comp) ids.push_back(g.id(v));
    return ids;
}

void axiom1(const SignedColoredGraph& g, std::vector<RuleWitness>& wit) {
    int n = g.generator_rank();
    for (int i = 1; i < n; ++i)
        for (int v = 0; v < g.size(); ++v) {
            bool admits = g.tau(v).contains(i) != g.tau(v).contains(i + 1);
            int cnt = 0;
            for (int e : g.incident(v))
                if (g.edges()[e].beta.contains(i)) ++cnt;
            if (cnt != (admits ? 1 : 0))
                wit.push_back({{g.id(v)},
                               color_label(i) + ": degree " + std::to_string(cnt) +
                                   (admits ? ", one exchange admitted" : ", no exchange admitted")});
        }
}

void axiom2(const SignedColoredGraph& g, std::vector<RuleWitness>& wit) {
    int n = g.generator_rank();
    for (const auto& e : g.edges()) {
        TauSet tw = g.tau(e.a), tx = g.tau(e.b);
        for (int i : e.beta.to_list()) {
            if (tw.contains(i) != tx.contains(i + 1) || tw.contains(i + 1) != tx.contains(i))
                wit.push_back({{g.id(e.a), g.id(e.b)},
                               color_label(i) + ": memberships of " + std::to_string(i) + "," +
                                   std::to_string(i + 1) + " do not switch"});
            for (int h = 1; h <= n; ++h)
                if ((h < i - 1 || h > i + 2) && tw.contains(h) != tx.contains(h))
                    wit.push_back({{g.id(e.a), g.id(e.b)},
                                   color_label(i) + ": membership of " + std::to_string(h) +
                                       " changes"});
        }
    }
}

void axiom3(const SignedColoredGraph& g, std::vector<RuleWitness>& wit) {
    int n = g.generator_rank();
    for (const auto& e : g.edges()) {
        TauSet tw = g.tau(e.a), tx = g.tau(e.b);
        TauSet delta = tw.diff(tx).unite(tx.diff(tw));
        for (int i : e.beta.to_list()) {
            if (i - 1 >= 1 && delta.contains(i - 1) &&
                (tw.contains(i - 1) != tw.contains(i + 1) ||
                 tx.contains(i - 1) != tx.contains(i + 1)))
                wit.push_back({{g.id(e.a), g.id(e.b)},
                               color_label(i) + ": " + std::to_string(i - 1) + " moves without " +
                                   std::to_string(i + 1) + " alongside"});
            if (i + 2 <= n && delta.contains(i + 2) &&
                (tw.contains(i + 2) != tw.contains(i) || tx.contains(i + 2) != tx.contains(i)))
                wit.push_back({{g.id(e.a), g.id(e.b)},
                               color_label(i) + ": " + std::to_string(i + 2) + " moves without " +
                                   std::to_string(i) + " alongside"});
        }
    }
}

void axiom4(const SignedColoredGraph& g, std::vector<RuleWitness>& wit) {
    int n = g.generator_rank();
    for (int width : {2, 3}) {
        if (n - width < 2) continue;
        const auto& cat = window_catalog(width);
        for (int i = 1; i < n - width; ++i)
            for (const auto& comp : window_component_sets(g, i, width)) {
                bool ok = static_cast<int>(comp.size()) <= cat.max_size &&
                          std::binary_search(cat.shapes.begin(), cat.shapes.end(),
                                             canonical_window_string(g, comp, i, width));
                if (!ok)
                    wit.push_back({comp_ids(g, comp),
                                   "colors " + color_label(i) + ".." + color_label(i + width - 1) +
                                       ": no standard shape of this form"});
            }
    }
}

void axiom5(const SignedColoredGraph& g, std::vector<RuleWitness>& wit) {
    for (int x = 0; x < g.size(); ++x)
        for (int e1 : g.incident(x))
            for (int e2 : g.incident(x)) {
                const auto& f1 = g.edges()[e1];
                const auto& f2 = g.edges()[e2];
                int w = f1.a == x ? f1.b : f1.a;
                int y = f2.a == x ? f2.b : f2.a;
                if (w == y) continue;
                for (int i : f1.beta.to_list())
                    for (int j : f2.beta.to_list()) {
                        if (j - i < 3 && i - j < 3) continue;
                        bool found = false;
                        for (int e3 : g.incident(w)) {
                            const auto& f3 = g.edges()[e3];
                            if (!f3.beta.contains(j)) continue;
                            int v = f3.a == w ? f3.b : f3.a;
                            if (g.beta_between(v, y).contains(i)) {
                                found = true;
                                break;
                            }
                        }
                        if (!found)
                            wit.push_back({{g.id(w), g.id(x), g.id(y)},
                                           "colors " + color_label(i) + "," + color_label(j) +
                                               ": commuting square does not close"});
                    }
            }
}

void axiom6(const SignedColoredGraph& g, std::vector<RuleWitness>& wit) {
    int n = g.generator_rank();
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<std::vector<int>> scopes;
        if (i < n - 1) {
            scopes = comps_where(g, TauSet::up_to(i), nullptr);
        } else {
            std::vector<int> all(g.size());
            std::iota(all.begin(), all.end(), 0);
            scopes.push_back(std::move(all));
        }
        for (const auto& scope : scopes) {
            auto pieces = comps_where(g, TauSet::up_to(i - 1), &scope);
            if (pieces.size() < 2) continue;
            std::vector<int> pidx(g.size(), -1);
            for (int pi = 0; pi < static_cast<int>(pieces.size()); ++pi)
                for (int v : pieces[pi]) pidx[v] = pi;
            std::vector<std::vector<char>> joined(pieces.size(),
                                                  std::vector<char>(pieces.size(), 0));
            for (const auto& e : g.edges()) {
                if (!e.beta.contains(i)) continue;
                int pa = pidx[e.a], pb = pidx[e.b];
                if (pa >= 0 && pb >= 0 && pa != pb) joined[pa][pb] = joined[pb][pa] = 1;
            }
            for (std::size_t p = 0; p < pieces.size(); ++p)
                for (std::size_t q = p + 1; q < pieces.size(); ++q)
                    if (!joined[p][q])
                        wit.push_back({{g.id(pieces[p].front()), g.id(pieces[q].front())},
                                       "level " + color_label(i) +
                                           ": pieces not joined by an edge of that color"});
        }
    }
}

WindowCatalog build_catalog(int width, int m) {
    WindowCatalog cat;
    cat.width = width;
    std::set<std::string> shapes;
    for (const auto& shape : Partition::all(m)) {
        SignedColoredGraph g = standard_deg(shape);
        for (const auto& comp : window_component_sets(g, 1, width)) {
            shapes.insert(canonical_window_string(g, comp, 1, width));
            cat.max_size = std::max(cat.max_size, static_cast<int>(comp.size()));
        }
    }
    cat.shapes.assign(shapes.begin(), shapes.end());
    return cat;
}

} // namespace

SignedColoredGraph standard_deg(const Partition& shape) {
    int m = shape.size();
    if (m < 1) throw domain_error("standard_deg: empty shape");
    int n = m - 1;
    auto tabs = enumerate_syt(shape);
    SignedColoredGraph::Builder b(n);
    for (const auto& t : tabs) b.add_vertex(t.id(), t.descent_tau());
    auto index_of = [&](const StandardTableau& t) {
        auto it = std::lower_bound(tabs.begin(), tabs.end(), t);
        return static_cast<int>(it - tabs.begin());
    };
    std::set<std::pair<int, int>> seen;
    for (int p = 0; p < static_cast<int>(tabs.size()); ++p)
        for (const auto& mv : dual_knuth_neighbors(tabs[p])) {
            int q = index_of(mv.result);
            auto key = std::minmax(p, q);
            if (!seen.insert(key).second) continue;
            b.add_edge(tabs[p].id(), tabs[q].id(),
                       beta_from_tau(tabs[p].descent_tau(), tabs[q].descent_tau(), n));
        }
    return b.build();
}

std::vector<DegAxiomReport> check_deg_axioms(const SignedColoredGraph& g, int upto) {
    if (upto < 1 || upto > 6) throw domain_error("check_deg_axioms: axiom range is 1..6");
    std::vector<DegAxiomReport> out;
    for (int a = 1; a <= upto; ++a) {
        DegAxiomReport rep;
        rep.axiom = a;
        switch (a) {
        case 1: axiom1(g, rep.witnesses); break;
        case 2: axiom2(g, rep.witnesses); break;
        case 3: axiom3(g, rep.witnesses); break;
        case 4: axiom4(g, rep.witnesses); break;
        case 5: axiom5(g, rep.witnesses); break;
        case 6: axiom6(g, rep.witnesses); break;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

bool is_weak_deg(const SignedColoredGraph& g) {
    for (const auto& rep : check_deg_axioms(g, 5))
        if (!rep.pass()) return false;
    return true;
}

bool is_deg(const SignedColoredGraph& g) {
    for (const auto& rep : check_deg_axioms(g, 6))
        if (!rep.pass()) return false;
    return true;
}

std::vector<std::vector<int>> window_component_sets(const SignedColoredGraph& g, int lo,
                                                    int width) {
    TauSet window;
    for (int j = 0; j < width; ++j) window = window.with(lo + j);
    return comps_where(g, window, nullptr);
}

std::string canonical_window_string(const SignedColoredGraph& g, const std::vector<int>& comp,
                                    int lo, int width) {
    int k = static_cast<int>(comp.size());
    // Shapes past any standard size cannot match a catalog; summarizing them
    // keeps this O(k!) canonicalization bounded.
    if (k > 7) return "oversize:" + std::to_string(k);
    std::vector<std::vector<int>> rel(k, std::vector<int>(k, 0));
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q) {
            TauSet beta = g.beta_between(comp[p], comp[q]);
            int mask = 0;
            for (int j = 0; j < width; ++j)
                if (beta.contains(lo + j)) mask |= 1 << j;
            rel[p][q] = rel[q][p] = mask;
        }
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s = std::to_string(k);
        s += '|';
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q) s += static_cast<char>('0' + rel[perm[p]][perm[q]]);
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

const WindowCatalog& window_catalog(int width) {
    if (width == 2) {
        static const WindowCatalog two = build_catalog(2, 4);
        return two;
    }
    if (width == 3) {
        static const WindowCatalog three = build_catalog(3, 5);
        return three;
    }
    throw domain_error("window_catalog: width is 2 or 3");
}

ScgRestriction restrict_scg(const SignedColoredGraph& g, int k) {
    if (k < 1 || k > g.type_rank()) throw domain_error("restrict_scg: type out of range");
    int n = k - 1;
    TauSet gens = TauSet::up_to(n);
    TauSet bonds = TauSet::up_to(n >= 1 ? n - 1 : 0);
    SignedColoredGraph::Builder b(n);
    for (int v = 0; v < g.size(); ++v) b.add_vertex(g.id(v), g.tau(v).intersect(gens));
    for (const auto& e : g.edges()) {
        TauSet beta = e.beta.intersect(bonds);
        if (!beta.empty()) b.add_edge(g.id(e.a), g.id(e.b), beta);
    }
    ScgRestriction r;
    r.graph = b.build();
    r.component_vertex_sets = scg_component_sets(r.graph);
    for (const auto& set : r.component_vertex_sets) r.components.push_back(scg_induced(r.graph, set));
    return r;
}

namespace {

// Backtracking search for a tau-preserving map g -> h sending every edge to
// an edge whose beta contains the source beta, covering all of h.
std::optional<std::vector<int>> find_onto_morphism(const SignedColoredGraph& g,
                                                   const SignedColoredGraph& h) {
    struct Slot {
        int v;
        int via; // edge index into g.edges(), -1 for component roots
    };
    std::vector<Slot> order;
    {
        std::vector<char> seen(g.size(), 0);
        for (const auto& comp : scg_component_sets(g)) {
            int root = comp.front();
            order.push_back({root, -1});
            seen[root] = 1;
            std::size_t head = order.size() - 1;
            while (head < order.size()) {
                int u = order[head++].v;
                for (int e : g.incident(u)) {
                    const auto& ed = g.edges()[e];
                    int v = ed.a == u ? ed.b : ed.a;
                    if (!seen[v]) {
                        seen[v] = 1;
                        order.push_back({v, e});
                    }
                }
            }
        }
    }
    std::vector<int> phi(g.size(), -1);
    auto consistent = [&](int v, int x) {
        if (g.tau(v) != h.tau(x)) return false;
        for (int e : g.incident(v)) {
            const auto& ed = g.edges()[e];
            int w = ed.a == v ? ed.b : ed.a;
            if (phi[w] == -1) continue;
            if (phi[w] == x) return false; // edges may not collapse
            auto he = h.edge_between(x, phi[w]);
            if (!he || !ed.beta.subset_of(h.edges()[*he].beta)) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == order.size()) {
            std::vector<char> hit(h.size(), 0);
            for (int x : phi) hit.at(x) = 1;
            return std::find(hit.begin(), hit.end(), 0) == hit.end();
        }
        auto [v, via] = order[k];
        std::vector<int> candidates;
        if (via == -1) {
            for (int x = 0; x < h.size(); ++x)
                if (h.tau(x) == g.tau(v)) candidates.push_back(x);
        } else {
            const auto& ed = g.edges()[via];
            int u = ed.a == v ? ed.b : ed.a;
            if (ed.beta.empty()) {
                for (int e : h.incident(phi[u])) {
                    const auto& he = h.edges()[e];
                    candidates.push_back(he.a == phi[u] ? he.b : he.a);
                }
            } else {
                // One color pins the image: the unique like-colored edge at phi(u).
                int i = ed.beta.to_list().front();
                for (int e : h.incident(phi[u])) {
                    const auto& he = h.edges()[e];
                    if (he.beta.contains(i)) candidates.push_back(he.a == phi[u] ? he.b : he.a);
                }
            }
        }
        for (int x : candidates) {
            if (!consistent(v, x)) continue;
            phi[v] = x;
            if (place(k + 1)) return true;
            phi[v] = -1;
        }
        return false;
    };
    if (place(0)) return phi;
    return std::nullopt;
}

} // namespace

MorphismResult morphism_to_standard(const SignedColoredGraph& g) {
    MorphismResult res;
    if (!is_weak_deg(g)) {
        res.status = MorphismResult::Status::NotWeakDeg;
        return res;
    }
    if (g.size() == 0) return res;
    for (const auto& shape : Partition::all(g.type_rank())) {
        SignedColoredGraph h = standard_deg(shape);
        auto phi = find_onto_morphism(g, h);
        if (!phi) continue;
        res.status = MorphismResult::Status::Ok;
        res.shape = shape;
        for (int x : *phi) res.image.push_back(h.id(x));
        std::set<int> distinct(phi->begin(), phi->end());
        bool bijective = g.size() == h.size() && static_cast<int>(distinct.size()) == h.size();
        bool edges_match = g.edges().size() == h.edges().size();
        if (bijective && edges_match)
            for (const auto& e : g.edges())
                edges_match = edges_match &&
                              h.beta_between((*phi)[e.a], (*phi)[e.b]) == e.beta;
        res.is_isomorphism = bijective && edges_match;
        return res;
    }
    return res;
}

SignedColoredGraph simple_part_scg(const SLabeledGraph& g) {
    SignedColoredGraph::Builder b(g.rank());
    for (int v = 0; v < g.size(); ++v) b.add_vertex(g.id(v), g.tau(v));
    for (int u = 0; u < g.size(); ++u)
        for (auto [v, w] : g.out_edges(u))
            if (u < v && is_simple_edge(g, u, v)) b.add_edge(g.id(u), g.id(v), activated_bonds(g, u, v));
    return b.build();
}

SLabeledGraph scg_to_slabeled(const SignedColoredGraph& g) {
    SLabeledGraph::Builder b(g.generator_rank());
    for (int v = 0; v < g.size(); ++v) b.add_vertex(g.id(v), g.tau(v));
    for (const auto& e : g.edges()) {
        b.add_edge(g.id(e.a), g.id(e.b), 1);
        b.add_edge(g.id(e.b), g.id(e.a), 1);
    }
    return b.build();
}

} // namespace wgm
