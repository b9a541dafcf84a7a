#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <unordered_set>

#include "lenlab/enumeration.hpp"
#include "lenlab/group.hpp"

using namespace lenlab;
using groups::Element;
using groups::GeneratingSet;
using groups::GroupSpec;

namespace {

Element random_element(const GroupSpec& g, std::mt19937_64& rng, int max_steps = 6) {
    auto X = GeneratingSet::standard(g);
    std::uniform_int_distribution<int> steps(0, max_steps);
    std::uniform_int_distribution<std::size_t> pick(0, X.elements.size() - 1);
    Element e = Element::identity(g);
    int n = steps(rng);
    for (int i = 0; i < n; ++i) e = groups::multiply(e, X.elements[pick(rng)]);
    return e;
}

const std::vector<GroupSpec> kCatalog = {
    GroupSpec::free_group(2),
    GroupSpec::free_abelian(2),
    GroupSpec::cyclic(4),
    GroupSpec::vc(),
    GroupSpec::ab_torsion(2),
    GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}),
    GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::free_group(1)}),
};

} // namespace

TEST_CASE("free group arithmetic") {
    GroupSpec F2 = GroupSpec::free_group(2);
    Element a = Element::parse(F2, "a1");
    Element b = Element::parse(F2, "b1");
    Element ab = groups::multiply(a, b);
    CHECK(groups::multiply(ab, groups::inverse(b)) == a);
    CHECK(groups::inverse(ab).token() == "b-1 a-1");
    CHECK(groups::conjugate(a, b).token() == "b-1 a1 b1");
    CHECK(groups::conjugate(a, Element::identity(F2)) == a);
}

TEST_CASE("vc group arithmetic") {
    GroupSpec G = GroupSpec::vc();
    Element a = Element::from_vc(G, 1, 0);
    Element b = Element::from_vc(G, 0, 1);
    // b^-1 a b = a^-1
    CHECK(groups::conjugate(a, b) == groups::inverse(a));
    Element a2b = Element::parse(G, "a^2 b^1");
    CHECK(groups::inverse(a2b) == Element::parse(G, "a^2 b^3"));
    CHECK(groups::multiply(a2b, groups::inverse(a2b)).is_identity());
    // b has order 4
    Element b4 = groups::multiply(groups::multiply(b, b), groups::multiply(b, b));
    CHECK(b4.is_identity());
}

TEST_CASE("abelian variants") {
    GroupSpec T = GroupSpec::ab_torsion(2);
    Element x = Element::parse(T, "(1,0,0)");
    CHECK(groups::multiply(x, x) == Element::parse(T, "(2,0,0)"));
    CHECK(groups::multiply(groups::multiply(x, x), groups::multiply(x, x)).is_identity());

    GroupSpec C4 = GroupSpec::cyclic(4);
    CHECK(groups::inverse(Element::from_cyclic(C4, 3)) == Element::from_cyclic(C4, 1));
}

TEST_CASE("token round trip") {
    std::mt19937_64 rng(1);
    for (const auto& g : kCatalog) {
        CHECK(GroupSpec::parse(g.to_string()) == g);
        for (int i = 0; i < 50; ++i) {
            Element e = random_element(g, rng);
            CHECK(Element::parse(g, e.token()) == e);
        }
    }
}

TEST_CASE("group axioms on random triples") {
    std::mt19937_64 rng(2);
    for (const auto& g : kCatalog) {
        Element id = Element::identity(g);
        for (int i = 0; i < 1000; ++i) {
            Element x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
            CHECK(groups::multiply(groups::multiply(x, y), z) == groups::multiply(x, groups::multiply(y, z)));
            CHECK(groups::multiply(x, id) == x);
            CHECK(groups::multiply(id, x) == x);
            CHECK(groups::multiply(x, groups::inverse(x)) == id);
            CHECK(groups::multiply(groups::inverse(x), x) == id);
            // conjugation laws: (x^y)^z = x^{yz}, x^y = x [x,y]
            CHECK(groups::conjugate(groups::conjugate(x, y), z) == groups::conjugate(x, groups::multiply(y, z)));
        }
    }
}

TEST_CASE("group mismatch raises") {
    Element a = Element::parse(GroupSpec::free_group(2), "a1");
    Element c = Element::from_cyclic(GroupSpec::cyclic(4), 1);
    CHECK_THROWS_AS(groups::multiply(a, c), Error);
}

TEST_CASE("ball census free group") {
    GroupSpec F2 = GroupSpec::free_group(2);
    auto X = GeneratingSet::standard(F2);
    auto b2 = groups::ball(F2, X, 2);
    CHECK(b2.size() == 17); // 1 + 4 + 12
    CHECK(b2[0].is_identity());
    auto b3 = groups::ball(F2, X, 3);
    CHECK(b3.size() == 53); // + 36
    // nesting: ball r=2 is a prefix of ball r=3 (same BFS order)
    for (std::size_t i = 0; i < b2.size(); ++i) CHECK(b2[i] == b3[i]);
    // layer n = word length n
    for (const auto& e : b2) {
        auto wl = groups::word_length(X, e, 2);
        REQUIRE(wl.has_value());
        std::size_t idx = 0;
        while (!(b2[idx] == e)) ++idx;
        int layer = idx == 0 ? 0 : (idx <= 4 ? 1 : 2);
        CHECK(*wl == layer);
    }
}

TEST_CASE("ball census cyclic and vc") {
    GroupSpec C4 = GroupSpec::cyclic(4);
    auto X = GeneratingSet::standard(C4);
    CHECK(groups::ball(C4, X, 2).size() == 4);

    GroupSpec G = GroupSpec::vc();
    auto XV = GeneratingSet::standard(G);
    auto ball3 = groups::ball(G, XV, 3);
    // brute-force oracle: all products of <= 3 generators
    std::unordered_set<std::string> oracle{Element::identity(G).token()};
    std::vector<Element> frontier{Element::identity(G)};
    for (int step = 0; step < 3; ++step) {
        std::vector<Element> next;
        for (const auto& e : frontier)
            for (const auto& x : XV.elements) {
                Element n = groups::multiply(e, x);
                if (oracle.insert(n.token()).second) next.push_back(n);
            }
        frontier = std::move(next);
    }
    CHECK(ball3.size() == oracle.size());
    for (const auto& e : ball3) CHECK(oracle.count(e.token()) == 1);
}

TEST_CASE("generating set verification") {
    GroupSpec C4 = GroupSpec::cyclic(4);
    auto good = GeneratingSet::from_elements(C4, {Element::from_cyclic(C4, 1)});
    CHECK(good.verify());
    auto bad = GeneratingSet::from_elements(C4, {Element::from_cyclic(C4, 2)});
    CHECK_FALSE(bad.verify());
    CHECK(GeneratingSet::standard(GroupSpec::vc()).verify());
}

TEST_CASE("conjugacy classes in balls") {
    GroupSpec T = GroupSpec::ab_torsion(2);
    Element x = Element::parse(T, "(1,0,0)");
    auto cls = groups::conjugacy_class_in_ball(T, x, GeneratingSet::standard(T), 3);
    CHECK(cls.size() == 1);
    CHECK(cls[0] == x);

    GroupSpec F2 = GroupSpec::free_group(2);
    Element a = Element::parse(F2, "a1");
    auto XF = GeneratingSet::standard(F2);
    auto c1 = groups::conjugacy_class_in_ball(F2, a, XF, 1);
    auto c2 = groups::conjugacy_class_in_ball(F2, a, XF, 2);
    CHECK(c2.size() > c1.size());

    GroupSpec V = GroupSpec::vc();
    Element va = Element::from_vc(V, 1, 0);
    for (int r = 1; r <= 3; ++r) {
        auto cv = groups::conjugacy_class_in_ball(V, va, GeneratingSet::standard(V), r);
        REQUIRE(cv.size() == 2);
        CHECK(((cv[0] == va && cv[1] == groups::inverse(va)) ||
               (cv[1] == va && cv[0] == groups::inverse(va))));
    }

    CHECK_THROWS_AS(groups::conjugacy_class_in_ball(V, Element::identity(V), GeneratingSet::standard(V), 1),
                    Error);
}

TEST_CASE("free product syllables stay alternating") {
    GroupSpec G = GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::free_group(1)});
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        Element e = groups::multiply(random_element(G, rng), random_element(G, rng));
        const auto& w = std::get<Element::ProductWord>(e.payload());
        for (std::size_t k = 0; k + 1 < w.factor.size(); ++k) CHECK(w.factor[k] != w.factor[k + 1]);
        for (const auto& s : w.syll) CHECK_FALSE(s.is_identity());
    }
}

TEST_CASE("ball enumeration is deterministic and budgeted") {
    GroupSpec F2 = GroupSpec::free_group(2);
    auto X = GeneratingSet::standard(F2);
    auto b1 = groups::ball(F2, X, 2);
    auto b2 = groups::ball(F2, X, 2);
    REQUIRE(b1.size() == b2.size());
    for (std::size_t i = 0; i < b1.size(); ++i) CHECK(b1[i] == b2[i]);
    CHECK_THROWS_AS(groups::ball(F2, X, 10, 100), Error); // tiny budget
}
