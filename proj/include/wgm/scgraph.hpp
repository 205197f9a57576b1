#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wgm/tau_set.hpp"

namespace wgm {

// Signed colored graph of type n+1: undirected simple graph with tau over
// generators {1..n} and edge color sets beta over bonds {a_1..a_{n-1}},
// a bond index i standing for a_i = (i, i+1).
class SignedColoredGraph {
public:
    struct Vertex {
        std::string id;
        TauSet tau;
    };
    struct Edge {
        int a, b;    // vertex indices, a < b
        TauSet beta; // bond indices
    };

    class Builder {
    public:
        explicit Builder(int n);
        Builder& add_vertex(const std::string& id, TauSet tau);
        Builder& add_edge(const std::string& u, const std::string& v, TauSet beta);
        SignedColoredGraph build();

    private:
        int n_;
        std::vector<Vertex> verts_;
        std::unordered_map<std::string, int> index_;
        std::vector<Edge> edges_;
    };

    int generator_rank() const { return n_; }
    int type_rank() const { return n_ + 1; }

    int size() const { return static_cast<int>(verts_.size()); }
    const Vertex& vertex(int v) const { return verts_.at(v); }
    TauSet tau(int v) const { return verts_.at(v).tau; }
    const std::string& id(int v) const { return verts_.at(v).id; }
    int index_of(const std::string& id) const;

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& incident(int v) const { return incident_.at(v); } // edge indices
    std::optional<int> edge_between(int u, int v) const;
    TauSet beta_between(int u, int v) const; // empty when no edge

    bool operator==(const SignedColoredGraph& o) const;

private:
    friend class Builder;
    SignedColoredGraph() = default;

    int n_ = 0;
    std::vector<Vertex> verts_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

// {a_i : i in precisely one of the two sets, i+1 in precisely the other}.
TauSet beta_from_tau(TauSet tu, TauSet tv, int n);

// Bijection preserving tau and beta exactly.
std::optional<std::vector<int>> find_scg_isomorphism(const SignedColoredGraph& g,
                                                     const SignedColoredGraph& h);

// Connected components (over all edges), ordered by lexicographically
// minimal vertex id.
std::vector<std::vector<int>> scg_component_sets(const SignedColoredGraph& g);
SignedColoredGraph scg_induced(const SignedColoredGraph& g, const std::vector<int>& verts);

} // namespace wgm
