#include "wgm/slgraph.hpp"

#include <algorithm>
#include <map>

namespace wgm {

SLabeledGraph::Builder::Builder(int rank) : rank_(rank), active_(TauSet::up_to(rank)) {
    if (rank < 0 || rank > 30) throw domain_error("SLabeledGraph: rank out of range");
}

SLabeledGraph::Builder& SLabeledGraph::Builder::set_active(TauSet act) {
    if (!act.subset_of(TauSet::up_to(rank_)))
        throw domain_error("SLabeledGraph: active set exceeds rank");
    active_ = act;
    return *this;
}

SLabeledGraph::Builder& SLabeledGraph::Builder::add_vertex(const std::string& id, TauSet tau) {
    if (index_.count(id)) throw domain_error("SLabeledGraph: duplicate vertex id " + id);
    if (!tau.subset_of(TauSet::up_to(rank_)))
        throw domain_error("SLabeledGraph: tau exceeds rank at vertex " + id);
    index_[id] = static_cast<int>(verts_.size());
    verts_.push_back({id, tau});
    out_.emplace_back();
    return *this;
}

SLabeledGraph::Builder& SLabeledGraph::Builder::add_edge(const std::string& src,
                                                         const std::string& dst,
                                                         long long weight) {
    auto su = index_.find(src);
    auto sv = index_.find(dst);
    if (su == index_.end() || sv == index_.end())
        throw structural_error("edges", "edge references unknown vertex " +
                                            (su == index_.end() ? src : dst));
    if (su->second == sv->second) throw domain_error("SLabeledGraph: loop at " + src);
    if (weight <= 0) throw domain_error("SLabeledGraph: edge weight must be positive");
    if (!out_[su->second].emplace(sv->second, weight).second)
        throw structural_error("edges", "duplicate edge " + src + " -> " + dst);
    return *this;
}

SLabeledGraph SLabeledGraph::Builder::build() {
    SLabeledGraph g;
    g.rank_ = rank_;
    g.active_ = active_;
    g.verts_ = std::move(verts_);
    g.index_ = std::move(index_);
    g.out_.resize(g.verts_.size());
    g.in_.resize(g.verts_.size());
    for (int u = 0; u < static_cast<int>(out_.size()); ++u) {
        for (auto [v, w] : out_[u]) {
            g.out_[u].push_back({v, w});
            g.in_[v].push_back({u, w});
        }
    }
    for (auto& adj : g.out_) std::sort(adj.begin(), adj.end());
    for (auto& adj : g.in_) std::sort(adj.begin(), adj.end());
    return g;
}

int SLabeledGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw domain_error("SLabeledGraph: no vertex " + id);
    return it->second;
}

std::optional<int> SLabeledGraph::find_vertex(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

long long SLabeledGraph::weight(int u, int v) const {
    const auto& adj = out_.at(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), std::make_pair(v, 0LL));
    if (it != adj.end() && it->first == v) return it->second;
    return 0;
}

long long SLabeledGraph::edge_count() const {
    long long c = 0;
    for (const auto& adj : out_) c += static_cast<long long>(adj.size());
    return c;
}

bool SLabeledGraph::operator==(const SLabeledGraph& o) const {
    if (rank_ != o.rank_ || active_ != o.active_ || verts_.size() != o.verts_.size())
        return false;
    for (const auto& v : verts_) {
        auto ov = o.find_vertex(v.id);
        if (!ov || o.verts_[*ov].tau != v.tau) return false;
    }
    long long edges = 0, oedges = 0;
    for (const auto& adj : out_) edges += static_cast<long long>(adj.size());
    for (const auto& adj : o.out_) oedges += static_cast<long long>(adj.size());
    if (edges != oedges) return false;
    for (int u = 0; u < size(); ++u) {
        int ou = *o.find_vertex(verts_[u].id);
        for (auto [v, w] : out_[u])
            if (o.weight(ou, *o.find_vertex(verts_[v].id)) != w) return false;
    }
    return true;
}

SLabeledGraph SLabeledGraph::restricted(TauSet j) const {
    Builder b(rank_);
    b.set_active(active_.intersect(j));
    for (const auto& v : verts_) b.add_vertex(v.id, v.tau.intersect(j));
    for (int u = 0; u < size(); ++u) {
        TauSet tu = verts_[u].tau.intersect(j);
        for (auto [v, w] : out_[u]) {
            if (tu.subset_of(verts_[v].tau.intersect(j))) continue;
            b.add_edge(verts_[u].id, verts_[v].id, w);
        }
    }
    return b.build();
}

SLabeledGraph SLabeledGraph::induced(const std::vector<int>& verts) const {
    Builder b(rank_);
    b.set_active(active_);
    std::vector<char> keep(verts_.size(), 0);
    for (int v : verts) keep.at(v) = 1;
    for (int v : verts) b.add_vertex(verts_[v].id, verts_[v].tau);
    for (int u : verts)
        for (auto [v, w] : out_[u])
            if (keep[v]) b.add_edge(verts_[u].id, verts_[v].id, w);
    return b.build();
}

EdgeKind edge_kind(const SLabeledGraph& g, int u, int v) {
    if (u == v) throw domain_error("edge_kind: u == v");
    bool uv = g.weight(u, v) != 0;
    bool vu = g.weight(v, u) != 0;
    if (uv && vu) return EdgeKind::Simple;
    if (uv) return EdgeKind::ArcForward;
    if (vu) return EdgeKind::ArcBackward;
    return EdgeKind::None;
}

bool is_simple_edge(const SLabeledGraph& g, int u, int v) {
    return u != v && g.weight(u, v) != 0 && g.weight(v, u) != 0;
}

bool activates(const SLabeledGraph& g, int u, int v, int i, int j) {
    if (!is_simple_edge(g, u, v)) throw domain_error("activates: (u, v) is not a simple edge");
    if (!g.coxeter().bonded(i, j)) throw domain_error("activates: (i, j) is not a bond");
    bool iu = g.tau(u).contains(i), iv = g.tau(v).contains(i);
    bool ju = g.tau(u).contains(j), jv = g.tau(v).contains(j);
    // i in precisely one endpoint, j in precisely the other.
    return (iu != iv) && (ju != jv) && (iu != ju);
}

TauSet activated_bonds(const SLabeledGraph& g, int u, int v) {
    TauSet out;
    for (auto [i, j] : g.coxeter().bonds())
        if (activates(g, u, v, i, j)) out = out.with(i);
    return out;
}

namespace {

bool layer_ok(TauSet t, int i, int j, int k) {
    if (k % 2 == 1) return t.contains(i) && !t.contains(j);
    return !t.contains(i) && t.contains(j);
}

} // namespace

long long alternating_path_count(const SLabeledGraph& g, int u, int v, int i, int j, int r) {
    if (r < 1) throw domain_error("alternating_path_count: r < 1");
    if (i == j) throw domain_error("alternating_path_count: i == j");
    std::vector<long long> ways(g.size(), 0);
    ways[u] = 1;
    for (int k = 1; k < r; ++k) {
        std::vector<long long> next(g.size(), 0);
        for (int p = 0; p < g.size(); ++p) {
            if (ways[p] == 0) continue;
            for (auto [z, w] : g.out_edges(p))
                if (layer_ok(g.tau(z), i, j, k)) next[z] += ways[p] * w;
        }
        ways = std::move(next);
    }
    long long total = 0;
    for (int p = 0; p < g.size(); ++p)
        if (ways[p] != 0) total += ways[p] * g.weight(p, v);
    return total;
}

std::vector<std::vector<int>> alternating_paths(const SLabeledGraph& g, int u, int v, int i,
                                                int j, int r) {
    if (r < 1) throw domain_error("alternating_paths: r < 1");
    if (i == j) throw domain_error("alternating_paths: i == j");
    std::vector<std::vector<int>> out;
    std::vector<int> cur{u};
    auto walk = [&](auto&& self, int at, int k) -> void {
        if (k == r) {
            if (at == v) out.push_back(cur);
            return;
        }
        if (k == r - 1) {
            if (g.weight(at, v) != 0) {
                cur.push_back(v);
                self(self, v, r);
                cur.pop_back();
            }
            return;
        }
        for (auto [z, w] : g.out_edges(at)) {
            (void)w;
            if (!layer_ok(g.tau(z), i, j, k + 1)) continue;
            cur.push_back(z);
            self(self, z, k + 1);
            cur.pop_back();
        }
    };
    walk(walk, u, 0);
    return out;
}

std::vector<std::vector<int>> simple_component_sets(const SLabeledGraph& g) {
    std::vector<int> comp(g.size(), -1);
    int ncomp = 0;
    for (int s = 0; s < g.size(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, w] : g.out_edges(u)) {
                (void)w;
                if (comp[v] == -1 && g.weight(v, u) != 0) {
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

std::vector<SLabeledGraph> simple_components(const SLabeledGraph& g) {
    std::vector<SLabeledGraph> out;
    for (const auto& set : simple_component_sets(g)) out.push_back(g.induced(set));
    return out;
}

} // namespace wgm
