#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wgm/coxeter.hpp"
#include "wgm/tau_set.hpp"

namespace wgm {

enum class EdgeKind { None, Simple, ArcForward, ArcBackward };

// S-labeled graph (V, m, tau): directed non-negative integer weights m and a
// tau-invariant per vertex.  Immutable once built; `active` records which
// generators are alive (restriction shrinks it, construction defaults to all).
class SLabeledGraph {
public:
    struct Vertex {
        std::string id;
        TauSet tau;
    };

    class Builder {
    public:
        explicit Builder(int rank);
        Builder& set_active(TauSet act);
        Builder& add_vertex(const std::string& id, TauSet tau);
        Builder& add_edge(const std::string& src, const std::string& dst, long long weight);
        SLabeledGraph build();

    private:
        int rank_;
        TauSet active_;
        std::vector<Vertex> verts_;
        std::unordered_map<std::string, int> index_;
        std::vector<std::unordered_map<int, long long>> out_;
    };

    int rank() const { return rank_; }
    TauSet active() const { return active_; }
    CoxeterTypeA coxeter() const { return CoxeterTypeA(rank_, active_); }

    int size() const { return static_cast<int>(verts_.size()); }
    const Vertex& vertex(int v) const { return verts_.at(v); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    TauSet tau(int v) const { return verts_.at(v).tau; }
    const std::string& id(int v) const { return verts_.at(v).id; }
    int index_of(const std::string& id) const;
    std::optional<int> find_vertex(const std::string& id) const;

    long long weight(int u, int v) const;
    // Neighbors with m(u, x) != 0, as (x, weight), sorted by index.
    const std::vector<std::pair<int, long long>>& out_edges(int u) const { return out_.at(u); }
    const std::vector<std::pair<int, long long>>& in_edges(int u) const { return in_.at(u); }
    long long edge_count() const;

    bool operator==(const SLabeledGraph& o) const;

    // tau' = tau cap J; m'(u,v) = 0 when tau'(u) is contained in tau'(v),
    // otherwise m(u,v).  Active generators shrink to J.
    SLabeledGraph restricted(TauSet j) const;
    // Induced subgraph on the given vertex indices (all internal weights kept).
    SLabeledGraph induced(const std::vector<int>& verts) const;

private:
    friend class Builder;
    SLabeledGraph() = default;

    int rank_ = 0;
    TauSet active_;
    std::vector<Vertex> verts_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<std::pair<int, long long>>> out_;
    std::vector<std::vector<std::pair<int, long long>>> in_;
};

EdgeKind edge_kind(const SLabeledGraph& g, int u, int v);

bool is_simple_edge(const SLabeledGraph& g, int u, int v);

// Whether the simple edge (u, v) splits bond (i, j) across its endpoints.
bool activates(const SLabeledGraph& g, int u, int v, int i, int j);

TauSet activated_bonds(const SLabeledGraph& g, int u, int v);

// Sum over alternating paths u -> v_1 -> .. -> v_{r-1} -> v of the weight
// product, where odd-position intermediates contain i but not j and
// even-position ones contain j but not i.  Endpoint tau is not constrained.
long long alternating_path_count(const SLabeledGraph& g, int u, int v, int i, int j, int r);

// The same alternating paths as explicit vertex sequences (including u, v).
std::vector<std::vector<int>> alternating_paths(const SLabeledGraph& g, int u, int v, int i,
                                                int j, int r);

// Connected components of the simple-edge subgraph, ordered by
// lexicographically minimal vertex id; each keeps the original vertex order.
std::vector<std::vector<int>> simple_component_sets(const SLabeledGraph& g);
std::vector<SLabeledGraph> simple_components(const SLabeledGraph& g);

} // namespace wgm
