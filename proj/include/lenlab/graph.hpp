#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lenlab/length.hpp"

namespace lenlab::graphs {

using groups::Element;
using lengths::LengthTable;

/// Simple undirected graph with named vertices and a cached all-pairs
/// distance matrix (-1 across components).
class FiniteGraph {
public:
    FiniteGraph() = default;
    explicit FiniteGraph(std::vector<std::string> vertex_names);

    int add_vertex(const std::string& name);
    void add_edge(int i, int j);
    /// add_vertex plus edges to nbrs in one step; keeps the distance cache
    /// valid incrementally (a single fresh vertex can only shorten old-pair
    /// distances via itself).
    int add_vertex_connected(const std::string& name, const std::vector<int>& nbrs);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    std::optional<int> index_of(const std::string& name) const;
    bool adjacent(int i, int j) const;
    const std::vector<int>& neighbors(int i) const { return adj_[i]; }

    /// Exact BFS shortest-path distance; -1 when disconnected.
    int distance(int i, int j) const;
    const std::vector<std::vector<int>>& distances() const;
    bool connected() const;

    std::string to_dot() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> adj_;
    mutable std::vector<std::vector<int>> dist_; // lazy cache
    mutable bool dirty_ = true;
};

struct VertexTuple {
    const FiniteGraph* graph = nullptr;
    std::vector<int> vertices;
};

using DistanceVector = std::vector<int>;

/// Vertex set { g : t(g) <= r }, edge a--b iff t(a^-1 b) = 1. Vertex names are
/// Element tokens. Throws InsufficientDomain (listing missing products) when
/// some pairwise product is outside t's domain.
FiniteGraph cayley_ball(const LengthTable& t, int r);

/// Pairwise-distance congruence of two equal-length tuples.
bool tuples_congruent(const VertexTuple& s, const VertexTuple& t);

/// d_i - d_j <= ell(a_i^-1 a_j) <= d_i + d_j for all i, j.
bool check_consistent(const LengthTable& t, const std::vector<Element>& a, const DistanceVector& d);

enum class SearchStatus { Found, NotFoundWithinDomain, VacuouslySatisfied };

struct DWitness {
    SearchStatus status = SearchStatus::NotFoundWithinDomain;
    std::optional<Element> witness;
};

/// First g in the given order with t(g^-1 a_i) = d_i for all i; vacuous when
/// d is not (t, a)-consistent. NotFoundWithinDomain is a window statement.
DWitness d_witness_search(const LengthTable& t, const std::vector<Element>& a, const DistanceVector& d,
                          const std::vector<Element>& search_domain);

/// First vertex v with d(v, a_i) = d_i for all i.
std::optional<int> ep_witness(const FiniteGraph& g, const std::vector<int>& tuple, const DistanceVector& d);

struct MossDemand {
    std::vector<int> tuple; // strictly increasing vertex indices
    DistanceVector dists;
    bool met = false;
};

struct MossRound {
    int round = 0;
    int vertices_added = 0;
    int demands_unmet = 0; // unrealizable by one-point extension this round
};

struct MossResult {
    FiniteGraph graph;
    std::vector<MossRound> rounds;
    // Final sweep over all consistent demands on the finished graph.
    std::vector<MossDemand> final_demands;
};

/// Bounded closure toward the Extension Property: starting from one vertex,
/// each round adds one-point extensions for every consistent unwitnessed
/// (tuple, d) demand with tuple size <= t_max and entries in [1, D_max] that a
/// fresh vertex with a suitable neighbor set can realize exactly.
MossResult moss_approximant(int t_max, int D_max, int rounds, std::size_t vertex_budget = 4000);

/// Delta plus a fresh path u1 - w0 - ... - w_{m-1} - u2 of length m + 1.
/// Requires d(u1, u2) = m. new_vertices, when given, receives the path indices.
FiniteGraph vc_extension_graph(const FiniteGraph& delta, int u1, int u2, int m,
                               std::vector<int>* new_vertices = nullptr);

} // namespace lenlab::graphs
