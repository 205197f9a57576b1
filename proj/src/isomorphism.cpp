#include "wgm/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace wgm {

std::optional<std::vector<int>> find_vertex_bijection(
    int size_g, int size_h, const std::function<bool(int, int)>& compatible,
    const std::function<bool(const std::vector<int>&, int, int)>& consistent) {
    if (size_g != size_h) return std::nullopt;
    std::vector<int> map(size_g, -1);
    std::vector<char> used(size_h, 0);
    auto place = [&](auto&& self, int u) -> bool {
        if (u == size_g) return true;
        for (int h = 0; h < size_h; ++h) {
            if (used[h] || !compatible(u, h) || !consistent(map, u, h)) continue;
            map[u] = h;
            used[h] = 1;
            if (self(self, u + 1)) return true;
            map[u] = -1;
            used[h] = 0;
        }
        return false;
    };
    if (place(place, 0)) return map;
    return std::nullopt;
}

namespace {

// tau multisets must agree or no bijection can preserve tau.
bool tau_multisets_match(const SLabeledGraph& g, const SLabeledGraph& h) {
    std::map<std::uint32_t, int> cg, ch;
    for (int v = 0; v < g.size(); ++v) ++cg[g.tau(v).bits()];
    for (int v = 0; v < h.size(); ++v) ++ch[h.tau(v).bits()];
    return cg == ch;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const SLabeledGraph& g,
                                                 const SLabeledGraph& h) {
    if (g.size() != h.size() || g.rank() != h.rank() || !tau_multisets_match(g, h))
        return std::nullopt;
    auto compatible = [&](int u, int x) {
        return g.tau(u) == h.tau(x) && g.out_edges(u).size() == h.out_edges(x).size() &&
               g.in_edges(u).size() == h.in_edges(x).size();
    };
    auto consistent = [&](const std::vector<int>& map, int u, int x) {
        for (int v = 0; v < u; ++v) {
            if (g.weight(u, v) != h.weight(x, map[v])) return false;
            if (g.weight(v, u) != h.weight(map[v], x)) return false;
        }
        return true;
    };
    return find_vertex_bijection(g.size(), h.size(), compatible, consistent);
}

std::optional<std::vector<int>> find_simple_part_isomorphism(const SLabeledGraph& g,
                                                             const SLabeledGraph& h) {
    if (g.size() != h.size() || g.rank() != h.rank() || !tau_multisets_match(g, h))
        return std::nullopt;
    auto simple_degree = [](const SLabeledGraph& a, int u) {
        int d = 0;
        for (auto [v, w] : a.out_edges(u)) {
            (void)w;
            if (a.weight(v, u) != 0) ++d;
        }
        return d;
    };
    auto compatible = [&](int u, int x) {
        return g.tau(u) == h.tau(x) && simple_degree(g, u) == simple_degree(h, x);
    };
    auto consistent = [&](const std::vector<int>& map, int u, int x) {
        for (int v = 0; v < u; ++v)
            if (is_simple_edge(g, u, v) != is_simple_edge(h, x, map[v])) return false;
        return true;
    };
    return find_vertex_bijection(g.size(), h.size(), compatible, consistent);
}

} // namespace wgm
