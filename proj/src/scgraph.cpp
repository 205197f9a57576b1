#include "wgm/scgraph.hpp"

#include <algorithm>
#include <map>

#include "wgm/isomorphism.hpp"

namespace wgm {

SignedColoredGraph::Builder::Builder(int n) : n_(n) {
    if (n < 0 || n > 30) throw domain_error("SignedColoredGraph: rank out of range");
}

SignedColoredGraph::Builder& SignedColoredGraph::Builder::add_vertex(const std::string& id,
                                                                     TauSet tau) {
    if (index_.count(id)) throw domain_error("SignedColoredGraph: duplicate vertex id " + id);
    if (!tau.subset_of(TauSet::up_to(n_)))
        throw domain_error("SignedColoredGraph: tau exceeds rank at vertex " + id);
    index_[id] = static_cast<int>(verts_.size());
    verts_.push_back({id, tau});
    return *this;
}

SignedColoredGraph::Builder& SignedColoredGraph::Builder::add_edge(const std::string& u,
                                                                   const std::string& v,
                                                                   TauSet beta) {
    auto su = index_.find(u);
    auto sv = index_.find(v);
    if (su == index_.end() || sv == index_.end())
        throw structural_error("edges", "edge references unknown vertex " +
                                            (su == index_.end() ? u : v));
    if (su->second == sv->second) throw domain_error("SignedColoredGraph: loop at " + u);
    if (!beta.subset_of(TauSet::up_to(n_ - 1 < 0 ? 0 : n_ - 1)))
        throw domain_error("SignedColoredGraph: beta exceeds bond range on edge " + u);
    int a = std::min(su->second, sv->second), b = std::max(su->second, sv->second);
    for (const auto& e : edges_)
        if (e.a == a && e.b == b)
            throw structural_error("edges", "duplicate edge " + u + " -- " + v);
    edges_.push_back({a, b, beta});
    return *this;
}

SignedColoredGraph SignedColoredGraph::Builder::build() {
    SignedColoredGraph g;
    g.n_ = n_;
    g.verts_ = std::move(verts_);
    g.index_ = std::move(index_);
    g.edges_ = std::move(edges_);
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& x, const Edge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    g.incident_.resize(g.verts_.size());
    for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
        g.incident_[g.edges_[e].a].push_back(e);
        g.incident_[g.edges_[e].b].push_back(e);
    }
    return g;
}

int SignedColoredGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw domain_error("SignedColoredGraph: no vertex " + id);
    return it->second;
}

std::optional<int> SignedColoredGraph::edge_between(int u, int v) const {
    for (int e : incident_.at(u)) {
        if (edges_[e].a == std::min(u, v) && edges_[e].b == std::max(u, v)) return e;
    }
    return std::nullopt;
}

TauSet SignedColoredGraph::beta_between(int u, int v) const {
    auto e = edge_between(u, v);
    return e ? edges_[*e].beta : TauSet();
}

bool SignedColoredGraph::operator==(const SignedColoredGraph& o) const {
    if (n_ != o.n_ || verts_.size() != o.verts_.size() || edges_.size() != o.edges_.size())
        return false;
    for (const auto& v : verts_) {
        auto it = o.index_.find(v.id);
        if (it == o.index_.end() || o.verts_[it->second].tau != v.tau) return false;
    }
    for (const auto& e : edges_) {
        auto oe = o.edge_between(o.index_of(verts_[e.a].id), o.index_of(verts_[e.b].id));
        if (!oe || o.edges_[*oe].beta != e.beta) return false;
    }
    return true;
}

TauSet beta_from_tau(TauSet tu, TauSet tv, int n) {
    TauSet out;
    for (int i = 1; i < n; ++i) {
        bool iu = tu.contains(i), iv = tv.contains(i);
        bool ju = tu.contains(i + 1), jv = tv.contains(i + 1);
        if ((iu != iv) && (ju != jv) && (iu != ju)) out = out.with(i);
    }
    return out;
}

std::optional<std::vector<int>> find_scg_isomorphism(const SignedColoredGraph& g,
                                                     const SignedColoredGraph& h) {
    if (g.size() != h.size() || g.generator_rank() != h.generator_rank() ||
        g.edges().size() != h.edges().size())
        return std::nullopt;
    std::map<std::uint32_t, int> cg, ch;
    for (int v = 0; v < g.size(); ++v) ++cg[g.tau(v).bits()];
    for (int v = 0; v < h.size(); ++v) ++ch[h.tau(v).bits()];
    if (cg != ch) return std::nullopt;
    auto compatible = [&](int u, int x) {
        return g.tau(u) == h.tau(x) && g.incident(u).size() == h.incident(x).size();
    };
    auto consistent = [&](const std::vector<int>& map, int u, int x) {
        for (int v = 0; v < u; ++v) {
            auto eg = g.edge_between(u, v);
            auto eh = h.edge_between(x, map[v]);
            if (eg.has_value() != eh.has_value()) return false;
            if (eg && g.edges()[*eg].beta != h.edges()[*eh].beta) return false;
        }
        return true;
    };
    return find_vertex_bijection(g.size(), h.size(), compatible, consistent);
}

std::vector<std::vector<int>> scg_component_sets(const SignedColoredGraph& g) {
    std::vector<int> comp(g.size(), -1);
    int ncomp = 0;
    for (int s = 0; s < g.size(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : g.incident(u)) {
                int v = g.edges()[e].a == u ? g.edges()[e].b : g.edges()[e].a;
                if (comp[v] == -1) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> sets(ncomp);
    for (int v = 0; v < g.size(); ++v) sets[comp[v]].push_back(v);
    auto min_id = [&](const std::vector<int>& set) {
        const std::string* best = &g.id(set.front());
        for (int v : set)
            if (g.id(v) < *best) best = &g.id(v);
        return *best;
    };
    std::sort(sets.begin(), sets.end(),
              [&](const auto& a, const auto& b) { return min_id(a) < min_id(b); });
    return sets;
}

SignedColoredGraph scg_induced(const SignedColoredGraph& g, const std::vector<int>& verts) {
    SignedColoredGraph::Builder b(g.generator_rank());
    std::vector<char> keep(g.size(), 0);
    for (int v : verts) keep.at(v) = 1;
    for (int v : verts) b.add_vertex(g.id(v), g.tau(v));
    for (const auto& e : g.edges())
        if (keep[e.a] && keep[e.b]) b.add_edge(g.id(e.a), g.id(e.b), e.beta);
    return b.build();
}

} // namespace wgm
