#include "wgm/wgraph.hpp"

#include <algorithm>

#include "wgm/deg.hpp"
#include "wgm/errors.hpp"
#include "wgm/isomorphism.hpp"
#include "wgm/kl.hpp"
#include "wgm/rsk.hpp"

namespace wgm {

namespace {

Permutation perm_from_id(const std::string& id) {
    std::vector<int> v;
    for (char c : id)
        if (c >= '1' && c <= '9') v.push_back(c - '0');
    return Permutation(std::move(v));
}

// The convention (left descents, mu kept when tau(u) is not inside tau(w))
// must make every cell a single molecule whose simple part is the standard
// graph of its common insertion shape.
void assert_convention(const WGraph& wg) {
    for (const auto& cg : cells(wg.graph).cell_graphs) {
        auto molecules = simple_components(cg);
        if (molecules.size() != 1)
            throw structural_error("wgraph", "cell splits into several molecules");
        const auto& mol = molecules.front();
        Partition shape = rsk(perm_from_id(mol.id(0))).p.shape();
        if (!find_scg_isomorphism(simple_part_scg(mol), standard_deg(shape)))
            throw structural_error("wgraph", "cell simple part is not the standard graph of " +
                                                 shape.to_string());
    }
}

} // namespace

WGraph build_left_wgraph(int m, bool allow_m7) {
    if (m < 2) throw domain_error("build_left_wgraph: m >= 2 required");
    if (m > 7) throw resource_error("build_left_wgraph: m > 7 unsupported");
    if (m == 7 && !allow_m7)
        throw resource_error("build_left_wgraph: m = 7 requires the explicit override");
    KLTable table(m);
    const auto& group = table.group();
    SLabeledGraph::Builder b(m - 1);
    for (const auto& w : group) b.add_vertex(w.one_line(), w.left_descents());
    for (int u = 0; u < table.size(); ++u)
        for (int w = 0; w < table.size(); ++w) {
            if (u == w || table.left_descents(u).subset_of(table.left_descents(w))) continue;
            long long mu = table.mu_between(u, w);
            if (mu != 0) b.add_edge(group[u].one_line(), group[w].one_line(), mu);
        }
    WGraph wg{b.build(), group};
    if (m <= 4) assert_convention(wg);
    return wg;
}

CellDecomposition cells(const SLabeledGraph& g) {
    int n = g.size();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<char> on(n, 0);
    std::vector<int> stk;
    std::vector<std::vector<int>> comps;
    int counter = 0;
    struct Frame {
        int v;
        std::size_t ei;
    };
    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        num[root] = low[root] = counter++;
        stk.push_back(root);
        on[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& outs = g.out_edges(f.v);
            if (f.ei < outs.size()) {
                int w = outs[f.ei++].first;
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stk.push_back(w);
                    on[w] = 1;
                    call.push_back({w, 0});
                } else if (on[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                if (low[f.v] == num[f.v]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on[w] = 0;
                        comp.push_back(w);
                        if (w == f.v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    std::sort(comps.begin(), comps.end());
    CellDecomposition d;
    d.cells = std::move(comps);
    d.cell_of.assign(n, -1);
    for (int c = 0; c < static_cast<int>(d.cells.size()); ++c)
        for (int v : d.cells[c]) d.cell_of[v] = c;
    for (const auto& comp : d.cells) d.cell_graphs.push_back(g.induced(comp));
    return d;
}

std::vector<SLabeledGraph> extract_molecules(const CellDecomposition& d) {
    std::vector<SLabeledGraph> out;
    for (const auto& cg : d.cell_graphs)
        for (auto& mol : simple_components(cg)) out.push_back(std::move(mol));
    return out;
}

long long involution_count(int m) {
    if (m < 0) throw domain_error("involution_count: m >= 0");
    long long a = 1, b = 1; // I(0), I(1)
    if (m == 0) return a;
    for (int k = 2; k <= m; ++k) {
        long long c = b + (k - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

} // namespace wgm
