#include "lenlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace lenlab::graphs {




FiniteGraph::FiniteGraph(std::vector<std::string> vertex_names) : names_(std::move(vertex_names)) {
    adj_.resize(names_.size());
}

int FiniteGraph::add_vertex(const std::string& name) {
    names_.push_back(name);
    adj_.emplace_back();
    dirty_ = true;
    return static_cast<int>(names_.size()) - 1;
}

void FiniteGraph::add_edge(int i, int j) {
    if (i == j) throw Error(Errc::PreconditionFailed, "loops are not allowed");
    if (i < 0 || j < 0 || i >= static_cast<int>(size()) || j >= static_cast<int>(size()))
        throw Error(Errc::PreconditionFailed, "edge endpoint out of range");
    if (adjacent(i, j)) return;
    adj_[i].push_back(j);
    adj_[j].push_back(i);
    dirty_ = true;
}

int FiniteGraph::add_vertex_connected(const std::string& name, const std::vector<int>& nbrs) {
    if (dirty_ || nbrs.empty()) {
        int w = add_vertex(name);
        for (int v : nbrs) add_edge(w, v);
        return w;
    }
    int w = static_cast<int>(size());
    names_.push_back(name);
    adj_.emplace_back();
    for (int v : nbrs) {
        if (v < 0 || v >= w || std::find(adj_[w].begin(), adj_[w].end(), v) != adj_[w].end())
            throw Error(Errc::PreconditionFailed, "bad neighbor for fresh vertex");
        adj_[w].push_back(v);
        adj_[v].push_back(w);
    }
    std::size_t n = size();
    for (auto& row : dist_) row.push_back(-1);
    dist_.emplace_back(n, -1);
    dist_[w][w] = 0;
    for (int u = 0; u < w; ++u) {
        int best = -1;
        // Shortest u-w paths end with an edge into w, so the old matrix decides.
        for (int v : nbrs) {
            int d = dist_[v][u];
            if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
        }
        dist_[w][u] = dist_[u][w] = best;
    }
    for (int u = 0; u < w; ++u) {
        int du = dist_[w][u];
        if (du < 0) continue;
        for (int v = u + 1; v < w; ++v) {
            int dv = dist_[w][v];
            if (dv < 0) continue;
            int via = du + dv;
            if (dist_[u][v] < 0 || via < dist_[u][v]) dist_[u][v] = dist_[v][u] = via;
        }
    }
    return w;
}

std::optional<int> FiniteGraph::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool FiniteGraph::adjacent(int i, int j) const {
    return std::find(adj_[i].begin(), adj_[i].end(), j) != adj_[i].end();
}

const std::vector<std::vector<int>>& FiniteGraph::distances() const {
    if (dirty_) {
        std::size_t n = size();
        dist_.assign(n, std::vector<int>(n, -1));
        for (std::size_t s = 0; s < n; ++s) {
            auto& row = dist_[s];
            row[s] = 0;
            std::deque<int> q{static_cast<int>(s)};
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                for (int u : adj_[v]) {
                    if (row[u] < 0) {
                        row[u] = row[v] + 1;
                        q.push_back(u);
                    }
                }
            }
        }
        dirty_ = false;
    }
    return dist_;
}

int FiniteGraph::distance(int i, int j) const { return distances()[i][j]; }

bool FiniteGraph::connected() const {
    if (size() == 0) return true;
    const auto& row = distances()[0];
    return std::all_of(row.begin(), row.end(), [](int d) { return d >= 0; });
}

std::string FiniteGraph::to_dot() const {
    std::string s = "graph G {\n";
    for (std::size_t i = 0; i < names_.size(); ++i)
        s += "  v" + std::to_string(i) + " [label=\"" + names_[i] + "\"];\n";
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (int j : adj_[i])
            if (static_cast<int>(i) < j) s += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    return s + "}\n";
}

// ---------------------------------------------------------------------------

FiniteGraph cayley_ball(const LengthTable& t, int r) {
    std::vector<Element> verts;
    for (const auto& g : t.domain())
        if (auto v = t.exact(g); v && *v <= r) verts.push_back(g);
    std::vector<std::string> names;
    names.reserve(verts.size());
    for (const auto& g : verts) names.push_back(g.token());
    FiniteGraph graph(names);
    std::vector<std::string> missing;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        Element inv_i = groups::inverse(verts[i]);
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            Element p = groups::multiply(inv_i, verts[j]);
            auto v = t.get(p);
            if (!v) {
                missing.push_back(p.token());
                continue;
            }
            // A capped entry exceeds its cap >= 1, so it never yields an edge.
            if (!v->capped && v->value == 1) graph.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    if (!missing.empty()) {
        std::string msg = "missing products:";
        for (const auto& m : missing) msg += " " + m;
        throw Error(Errc::InsufficientDomain, msg);
    }
    return graph;
}

bool tuples_congruent(const VertexTuple& s, const VertexTuple& t) {
    if (s.vertices.size() != t.vertices.size())
        throw Error(Errc::LengthMismatch, "tuples of different lengths");
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        for (std::size_t j = 0; j < s.vertices.size(); ++j)
            if (s.graph->distance(s.vertices[i], s.vertices[j]) !=
                t.graph->distance(t.vertices[i], t.vertices[j]))
                return false;
    return true;
}

bool check_consistent(const LengthTable& t, const std::vector<Element>& a, const DistanceVector& d) {
    if (a.size() != d.size()) throw Error(Errc::LengthMismatch, "tuple/distance arity mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            Element p = groups::multiply(groups::inverse(a[i]), a[j]);
            auto v = t.exact(p);
            if (!v) throw Error(Errc::InsufficientDomain, "no value for " + p.token());
            if (d[i] - d[j] > *v || *v > d[i] + d[j]) return false;
        }
    }
    return true;
}

DWitness d_witness_search(const LengthTable& t, const std::vector<Element>& a, const DistanceVector& d,
                          const std::vector<Element>& search_domain) {
    if (!check_consistent(t, a, d)) return {SearchStatus::VacuouslySatisfied, std::nullopt};
    for (const auto& g : search_domain) {
        Element gi = groups::inverse(g);
        bool all = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            Element p = groups::multiply(gi, a[i]);
            auto v = t.get(p);
            if (!v) throw Error(Errc::InsufficientDomain, "no value for " + p.token());
            if (v->capped || v->value != d[i]) {
                all = false;
                break;
            }
        }
        if (all) return {SearchStatus::Found, g};
    }
    return {SearchStatus::NotFoundWithinDomain, std::nullopt};
}

std::optional<int> ep_witness(const FiniteGraph& g, const std::vector<int>& tuple, const DistanceVector& d) {
    if (tuple.size() != d.size()) throw Error(Errc::LengthMismatch, "tuple/distance arity mismatch");
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        bool all = true;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (g.distance(v, tuple[i]) != d[i]) {
                all = false;
                break;
            }
        }
        if (all) return v;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Moss approximant

namespace {

/// All strictly increasing index tuples of sizes 1..t_max over [0, n).
void for_each_tuple(int n, int t_max, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (!cur.empty()) fn(cur);
        if (static_cast<int>(cur.size()) == t_max) return;
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

bool demand_consistent(const FiniteGraph& g, const std::vector<int>& tuple, const DistanceVector& d) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            int dist = g.distance(tuple[i], tuple[j]);
            if (dist < 0) return false;
            if (d[i] - d[j] > dist || dist > d[i] + d[j]) return false;
        }
    }
    return true;
}

/// Neighbor set realizing d(w, tuple[i]) = d[i] exactly for a fresh vertex w,
/// or empty when no one-point extension can. A valid neighbor set must sit
/// inside C = { v : d(v, a_i) >= d_i - 1 for all i } and hit d_i - 1 per i,
/// so the per-index first pick decides realizability.
std::vector<int> extension_neighbors(const FiniteGraph& g, const std::vector<int>& tuple,
                                     const DistanceVector& d) {
    std::vector<int> in_c;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        bool ok = true;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            if (g.distance(v, tuple[i]) < d[i] - 1) { // includes disconnected (-1)
                ok = false;
                break;
            }
        if (ok) in_c.push_back(v);
    }
    std::vector<int> chosen;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        int pick = -1;
        for (int v : in_c) {
            if (g.distance(v, tuple[i]) == d[i] - 1) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return {};
        if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) chosen.push_back(pick);
    }
    return chosen;
}

void for_each_dvec(int arity, int d_max, const std::function<void(const DistanceVector&)>& fn) {
    DistanceVector d(arity, 1);
    while (true) {
        fn(d);
        int k = arity - 1;
        while (k >= 0 && d[k] == d_max) d[k--] = 1;
        if (k < 0) break;
        ++d[k];
    }
}

} // namespace

MossResult moss_approximant(int t_max, int D_max, int rounds, std::size_t vertex_budget) {
    if (t_max < 1 || D_max < 1 || rounds < 1) throw Error(Errc::ConfigError, "moss parameters must be >= 1");
    MossResult res;
    res.graph = FiniteGraph({"w0.0"});
    for (int round = 1; round <= rounds; ++round) {
        MossRound rr;
        rr.round = round;
        int counter = 0;
        int n_start = static_cast<int>(res.graph.size());
        for_each_tuple(n_start, t_max, [&](const std::vector<int>& tuple) {
            for_each_dvec(static_cast<int>(tuple.size()), D_max, [&](const DistanceVector& d) {
                if (!demand_consistent(res.graph, tuple, d)) return;
                if (ep_witness(res.graph, tuple, d)) return;
                auto nbrs = extension_neighbors(res.graph, tuple, d);
                if (nbrs.empty()) {
                    ++rr.demands_unmet;
                    return;
                }
                if (res.graph.size() >= vertex_budget)
                    throw Error(Errc::BudgetExceeded, "moss approximant vertex budget");
                res.graph.add_vertex_connected(
                    "w" + std::to_string(round) + "." + std::to_string(counter++), nbrs);
                ++rr.vertices_added;
            });
        });
        res.rounds.push_back(rr);
    }
    // Final sweep: met/unmet is recorded against the finished graph, since
    // later insertions can shrink distances.
    for_each_tuple(static_cast<int>(res.graph.size()), t_max, [&](const std::vector<int>& tuple) {
        for_each_dvec(static_cast<int>(tuple.size()), D_max, [&](const DistanceVector& d) {
            if (!demand_consistent(res.graph, tuple, d)) return;
            MossDemand md;
            md.tuple = tuple;
            md.dists = d;
            md.met = ep_witness(res.graph, tuple, d).has_value();
            res.final_demands.push_back(std::move(md));
        });
    });
    return res;
}

FiniteGraph vc_extension_graph(const FiniteGraph& delta, int u1, int u2, int m,
                               std::vector<int>* new_vertices) {
    if (u1 == u2) throw Error(Errc::PreconditionFailed, "endpoints must differ");
    if (m < 1) throw Error(Errc::PreconditionFailed, "path parameter must be >= 1");
    if (delta.distance(u1, u2) != m)
        throw Error(Errc::PreconditionFailed, "d(u1, u2) = " + std::to_string(delta.distance(u1, u2)) +
                                                  " != m = " + std::to_string(m));
    FiniteGraph g = delta;
    int prev = u1;
    for (int i = 0; i < m; ++i) {
        int w = g.add_vertex("w" + std::to_string(i));
        if (new_vertices) new_vertices->push_back(w);
        g.add_edge(prev, w);
        prev = w;
    }
    g.add_edge(prev, u2);
    return g;
}

} // namespace lenlab::graphs
