#include "support/common.hpp"
#include "support/drawing.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bicubic;
using Names = std::vector<std::pair<std::string, std::string>>;

namespace {

void check_labels(const fixture::Drawing& d, const Names& by_label) {
    auto expected = fixture::labels_by_edge(d, by_label);
    auto got = label_edges(d.build());
    for (int e = 0; e < d.edges(); ++e)
        CHECK(got[e] == expected[e]);
}

} // namespace

TEST_SUITE("labeling") {

TEST_CASE("theta") {
    // Drawing order: lower arc (root), upper arc, middle.
    CHECK(label_edges(fixture::theta().build()) == EdgeLabeling{1, 2, 3});
}

TEST_CASE("cube") {
    check_labels(fixture::prism(4, "B3", "B4"),
                 {{"B3", "B4"}, {"B4", "B1"}, {"B1", "B2"}, {"B2", "B3"}, {"A2", "B2"}, {"A2", "A3"},
                  {"A3", "B3"}, {"A3", "A4"}, {"A4", "B4"}, {"A4", "A1"}, {"A1", "B1"}, {"A1", "A2"}});
}

TEST_CASE("6-prism rooted on the outer cycle") {
    check_labels(fixture::prism(6, "B4", "B5"),
                 {{"B4", "B5"}, {"B5", "B6"}, {"B6", "B1"}, {"B1", "B2"}, {"B2", "B3"}, {"B3", "B4"},
                  {"A3", "B3"}, {"A3", "A4"}, {"A4", "B4"}, {"A4", "A5"}, {"A5", "B5"}, {"A5", "A6"},
                  {"A6", "B6"}, {"A6", "A1"}, {"A1", "B1"}, {"A1", "A2"}, {"A2", "B2"}, {"A2", "A3"}});
}

TEST_CASE("6-prism rooted on a spoke") {
    check_labels(fixture::prism(6, "B4", "A4"),
                 {{"B4", "A4"}, {"A4", "A5"}, {"A5", "B5"}, {"B4", "B5"}, {"B5", "B6"}, {"B6", "B1"},
                  {"B1", "B2"}, {"B2", "B3"}, {"B3", "B4"}, {"A3", "B3"}, {"A3", "A4"}, {"A2", "A3"},
                  {"A1", "A2"}, {"A6", "A1"}, {"A5", "A6"}, {"A6", "B6"}, {"A1", "B1"}, {"A2", "B2"}});
}

TEST_CASE("6-prism rooted clockwise on the outer cycle") {
    check_labels(fixture::prism(6, "B4", "B3"),
                 {{"B4", "B3"}, {"A3", "B3"}, {"A3", "A4"}, {"A4", "B4"}, {"A4", "A5"}, {"A5", "B5"},
                  {"B4", "B5"}, {"B5", "B6"}, {"B6", "B1"}, {"B1", "B2"}, {"B2", "B3"}, {"A2", "B2"},
                  {"A2", "A3"}, {"A1", "A2"}, {"A6", "A1"}, {"A5", "A6"}, {"A6", "B6"}, {"A1", "B1"}});
}

TEST_CASE("road on the 14-vertex map") {
    auto d = fixture::fourteen();
    RootedMap m = d.build();
    Road road = build_road(m);
    std::vector<std::string> order{"SE", "B3", "B4", "E", "NE", "NW", "W", "SW", "A3", "A4", "B2", "B1", "A1", "A2"};
    REQUIRE(road.visit_order.size() == order.size());
    for (size_t i = 0; i < order.size(); ++i)
        CHECK(road.visit_order[i] == d.map_vertex(order[i]));
    std::vector<std::pair<int, int>> got, want;
    for (auto& s : road.steps)
        if (s.back)
            got.emplace_back(m.vertex(s.dart), m.head(s.dart));
    want.emplace_back(d.map_vertex("B1"), d.map_vertex("B2"));
    want.emplace_back(d.map_vertex("B2"), d.map_vertex("A4"));
    CHECK(got == want);
    CHECK(std::count(road.tree_edge.begin(), road.tree_edge.end(), 1) == m.vertices() - 1);
}

TEST_CASE("labels form a permutation with the root edge first") {
    for (int n = 1; n <= 4; ++n)
        for (auto& m : fixture::all_maps(n)) {
            auto lab = label_edges(m);
            auto sorted = lab;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < m.edges(); ++i)
                CHECK(sorted[i] == i + 1);
            CHECK(lab[RootedMap::edge(m.root())] == 1);
            auto byl = edges_by_label(lab);
            for (int e = 0; e < m.edges(); ++e)
                CHECK(byl[lab[e]] == e);
        }
}

}
