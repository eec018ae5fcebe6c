#include "support/common.hpp"
#include "support/drawing.hpp"

#include "bicubic/surgery.hpp"

#include <doctest.h>

using namespace bicubic;

TEST_SUITE("surgery") {

TEST_CASE("gluing adds edges and vertices") {
    std::vector<RootedMap> parts{theta(), prism(4), prism(6).reroot(7), fixture::load("hexagon.map")};
    for (auto& m : parts)
        for (auto& n : parts)
            for (int l = 1; l <= m.edges(); ++l) {
                RootedMap g = glue(m, l, n);
                CHECK(g.edges() == m.edges() + n.edges());
                CHECK(g.vertices() == m.vertices() + n.vertices());
                CHECK(validate(g).ok());
                CHECK_FALSE(is_primitive(g));
            }
}

TEST_CASE("gluing two thetas gives the maps on four vertices") {
    for (int i = 0; i < 3; ++i)
        CHECK(rooted_isomorphic(glue(theta(), i + 1, theta()), fixture::four_vertex(i).build()));
}

TEST_CASE("glue keeps edge indices") {
    RootedMap m = prism(4), n = theta();
    RootedMap g = glue_at_edge(m, 3, n);
    CHECK(g.root() == m.root());
    const int white = m.dark(6) ? 7 : 6;
    for (int d = 0; d < m.darts(); ++d)
        if (d != white && m.sigma(d) != white)
            CHECK(g.sigma(d) == m.sigma(d));
}

TEST_CASE("glue rejects bad labels") {
    CHECK_THROWS_AS(glue(theta(), 0, theta()), DomainError);
    CHECK_THROWS_AS(glue(theta(), 4, theta()), DomainError);
}

TEST_CASE("decomposition inverts gluing") {
    for (int n = 2; n <= 4; ++n)
        for (auto& m : fixture::all_maps(n)) {
            if (is_primitive(m))
                continue;
            Decomposition d = decompose(m);
            CHECK(d.m1.vertices() + d.m2.vertices() == m.vertices());
            CHECK(validate(d.m1).ok());
            CHECK(validate(d.m2).ok());
            CHECK(d.partner_candidates == 2);
            CHECK(rooted_isomorphic(glue(d.m1, d.distinguished_label, d.m2), m));
            CHECK(rooted_isomorphic(glue_at_edge(d.m1, d.distinguished_edge, d.m2), m));
        }
}

TEST_CASE("decomposition of primitive parts glued together") {
    RootedMap m = prism(6).reroot(3), n = prism(4);
    for (int l = 1; l <= m.edges(); ++l) {
        Decomposition d = decompose(glue(m, l, n));
        CHECK(rooted_isomorphic(d.m1, m));
        CHECK(d.distinguished_label == l);
        CHECK(rooted_isomorphic(d.m2, n));
    }
}

TEST_CASE("hexagon with doubled sides splits off a theta") {
    Decomposition d = decompose(fixture::load("hexagon.map"));
    CHECK(d.m1.vertices() == 2);
    CHECK(d.m2.vertices() == 4);
    CHECK(d.cut_set_size == 3);
    CHECK(d.partner_candidates == 2);
}

TEST_CASE("first cut edge") {
    CHECK_FALSE(find_first_cut_edge(prism(4)));
    RootedMap m = glue(theta(), 2, theta());
    auto e = find_first_cut_edge(m);
    REQUIRE(e);
    CHECK(cut_edges(m)[*e]);
    CHECK_THROWS_AS(decompose(prism(4)), DomainError);
}

}
