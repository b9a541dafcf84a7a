#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lenlab/graph.hpp"

using namespace lenlab;
using groups::Element;
using groups::GeneratingSet;
using groups::GroupSpec;
using graphs::DistanceVector;
using graphs::FiniteGraph;
using lengths::LengthTable;

namespace {

const GroupSpec F2 = GroupSpec::free_group(2);

FiniteGraph path3() {
    FiniteGraph g({"v1", "v2", "v3"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

LengthTable f2_word_length(int r) {
    return lengths::word_length_table(GeneratingSet::standard(F2), r);
}

} // namespace

TEST_CASE("graph basics and metric") {
    auto p = path3();
    CHECK(p.distance(0, 2) == 2);
    CHECK(p.connected());
    CHECK_THROWS_AS(p.add_edge(1, 1), Error);

    FiniteGraph iso({"u", "v"});
    CHECK(iso.distance(0, 1) == -1);
    CHECK_FALSE(iso.connected());

    CHECK(p.to_dot().find("v0 -- v1") != std::string::npos);
    CHECK(p.to_dot().find("v0 -- v2") == std::string::npos);
}

TEST_CASE("incremental insertion matches recomputation") {
    auto p = path3();
    (void)p.distances();
    int w = p.add_vertex_connected("w", {0, 2});
    FiniteGraph q({"v1", "v2", "v3", "w"});
    q.add_edge(0, 1);
    q.add_edge(1, 2);
    q.add_edge(3, 0);
    q.add_edge(3, 2);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            CHECK(p.distance(static_cast<int>(i), static_cast<int>(j)) ==
                  q.distance(static_cast<int>(i), static_cast<int>(j)));
    CHECK(w == 3);
}

TEST_CASE("cayley ball structure") {
    auto t = f2_word_length(4);
    auto star = graphs::cayley_ball(t, 1);
    CHECK(star.size() == 5);
    int id = *star.index_of("1");
    for (std::size_t v = 0; v < star.size(); ++v)
        if (static_cast<int>(v) != id) CHECK(star.adjacent(id, static_cast<int>(v)));

    auto ball2 = graphs::cayley_ball(t, 2);
    CHECK(ball2.size() == 17);
    for (const auto& g : t.domain()) {
        auto v = t.exact(g);
        if (*v > 2) continue;
        int idx = *ball2.index_of(g.token());
        CHECK(ball2.distance(*ball2.index_of("1"), idx) == *v);
        if (*v <= 1) { // interior vertices of the radius-2 ball
            int deg = static_cast<int>(ball2.neighbors(idx).size());
            CHECK(deg == 4);
        }
    }

    // constant-3 table: singleton vertex set, no edges
    LengthTable c3(F2, 0);
    for (const auto& g : t.domain()) c3.add(g, {g.is_identity() ? 0 : 3, false});
    auto lone = graphs::cayley_ball(c3, 2);
    CHECK(lone.size() == 1);

    // insufficient domain: radius-2 vertices need products up to length 4
    CHECK_THROWS_AS(graphs::cayley_ball(f2_word_length(2), 2), Error);
}

TEST_CASE("tuple congruence") {
    auto p = path3();
    graphs::VertexTuple ends{&p, {0, 2}};
    CHECK(graphs::tuples_congruent(ends, ends));

    auto t = f2_word_length(4);
    auto ball2 = graphs::cayley_ball(t, 2);
    graphs::VertexTuple edge{&ball2, {*ball2.index_of("1"), *ball2.index_of("a1")}};
    FiniteGraph e2({"x", "y"});
    e2.add_edge(0, 1);
    graphs::VertexTuple pair{&e2, {0, 1}};
    CHECK(graphs::tuples_congruent(edge, pair));
    CHECK_FALSE(graphs::tuples_congruent(ends, pair));

    graphs::VertexTuple solo{&p, {0}};
    CHECK_THROWS_AS(graphs::tuples_congruent(solo, pair), Error);
}

TEST_CASE("distance-vector consistency") {
    auto t = f2_word_length(4);
    Element one = Element::identity(F2);
    Element g0 = Element::parse(F2, "a1 b1 a1"); // length 3
    CHECK(graphs::check_consistent(t, {one, g0}, {2, 1}));
    CHECK_FALSE(graphs::check_consistent(t, {one, g0}, {1, 1}));
    CHECK(graphs::check_consistent(t, {Element::parse(F2, "a1")}, {0}));
    // symmetric under simultaneous permutation
    CHECK(graphs::check_consistent(t, {g0, one}, {1, 2}));
    CHECK_THROWS_AS(graphs::check_consistent(t, {one}, {1, 2}), Error);
}

TEST_CASE("distance witness search") {
    auto t = f2_word_length(4);
    auto domain = groups::ball(F2, GeneratingSet::standard(F2), 2);
    Element one = Element::identity(F2);
    Element a = Element::parse(F2, "a1");

    auto sphere = graphs::d_witness_search(t, {one}, {2}, domain);
    REQUIRE(sphere.status == graphs::SearchStatus::Found);
    CHECK(*t.exact(*sphere.witness) == 2);

    // no common neighbor of 1 and a in a tree
    auto none = graphs::d_witness_search(t, {one, a}, {1, 1}, domain);
    CHECK(none.status == graphs::SearchStatus::NotFoundWithinDomain);

    // complete-graph distances: first g off {1, a} works
    LengthTable c1(F2, 0);
    for (const auto& g : domain) c1.add(g, {g.is_identity() ? 0 : 1, false});
    auto found = graphs::d_witness_search(c1, {one, a}, {1, 1}, domain);
    REQUIRE(found.status == graphs::SearchStatus::Found);
    CHECK(found.witness->token() == "a-1"); // BFS order: 1, a, a^-1, ...

    Element g0 = Element::parse(F2, "a1 b1 a1");
    auto vac = graphs::d_witness_search(t, {one, g0}, {1, 1}, domain);
    CHECK(vac.status == graphs::SearchStatus::VacuouslySatisfied);
}

TEST_CASE("ep witness") {
    auto p = path3();
    CHECK(*graphs::ep_witness(p, {0}, {1}) == 1);
    CHECK(*graphs::ep_witness(p, {0, 2}, {1, 1}) == 1);

    FiniteGraph e({"x", "y"});
    e.add_edge(0, 1);
    CHECK_FALSE(graphs::ep_witness(e, {0, 1}, {2, 2}).has_value());
}

TEST_CASE("moss approximant small cases") {
    auto tiny = graphs::moss_approximant(1, 1, 1);
    CHECK(tiny.graph.size() == 2);
    CHECK(tiny.graph.adjacent(0, 1));

    auto res = graphs::moss_approximant(1, 2, 2);
    CHECK(res.graph.connected());
    // every round-1 vertex sees distances 1 and 2 exactly
    int round1_end = 1 + res.rounds[0].vertices_added;
    for (int v = 0; v < round1_end; ++v) {
        CHECK(graphs::ep_witness(res.graph, {v}, {1}).has_value());
        CHECK(graphs::ep_witness(res.graph, {v}, {2}).has_value());
    }
    // met demands in the ledger re-validate
    for (const auto& d : res.final_demands)
        if (d.met) CHECK(graphs::ep_witness(res.graph, d.tuple, d.dists).has_value());

    CHECK_THROWS_AS(graphs::moss_approximant(2, 3, 3, 5), Error); // tiny vertex budget
}

TEST_CASE("path extension preserves old distances") {
    GroupSpec V = GroupSpec::vc();
    auto t = lengths::word_length_table(GeneratingSet::standard(V), 8);
    auto delta = graphs::cayley_ball(t, 4);
    int u1 = *delta.index_of(Element::identity(V).token());
    int u2 = *delta.index_of(Element::from_vc(V, 0, 1).token());
    int m = delta.distance(u1, u2);
    REQUIRE(m == 1);

    std::vector<int> fresh;
    auto gamma = graphs::vc_extension_graph(delta, u1, u2, m, &fresh);
    REQUIRE(fresh.size() == 1);
    CHECK(gamma.size() == delta.size() + 1);
    for (std::size_t i = 0; i < delta.size(); ++i)
        for (std::size_t j = 0; j < delta.size(); ++j)
            CHECK(gamma.distance(static_cast<int>(i), static_cast<int>(j)) ==
                  delta.distance(static_cast<int>(i), static_cast<int>(j)));
    CHECK(gamma.distance(fresh[0], u1) == 1);
    CHECK(gamma.distance(fresh[0], u2) == 1);

    CHECK_THROWS_AS(graphs::vc_extension_graph(delta, u1, u2, 3, nullptr), Error);
}
