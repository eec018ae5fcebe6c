#include "bicubic/labeling.hpp"

namespace bicubic {

Road build_road(const RootedMap& m) {
    Road road;
    road.tree_edge.assign(m.edges(), 0);
    std::vector<char> seen(m.vertices(), 0);
    int remaining = m.vertices();
    auto visit = [&](int v) {
        seen[v] = 1;
        road.visit_order.push_back(v);
        --remaining;
    };

    int r = m.root();
    visit(m.vertex(r));
    if (remaining == 0)
        return road;
    visit(m.head(r));
    road.steps.push_back({r, false});
    road.tree_edge[RootedMap::edge(r)] = 1;
    std::vector<int> path{r};
    int back = r ^ 1;   // dart at the current vertex pointing back along the road

    while (remaining > 0) {
        int pick = -1;
        for (int x = m.sigma(back); x != back; x = m.sigma(x))
            if (!seen[m.head(x)]) {
                pick = x;
                break;
            }
        if (pick >= 0) {
            visit(m.head(pick));
            road.steps.push_back({pick, false});
            road.tree_edge[RootedMap::edge(pick)] = 1;
            path.push_back(pick);
            back = pick ^ 1;
        } else {
            if (path.empty())
                throw DomainError("map is not connected");
            int d = path.back();
            path.pop_back();
            road.steps.push_back({d ^ 1, true});
            back = d;
        }
    }
    return road;
}

EdgeLabeling label_edges(const RootedMap& m, const Road& road) {
    EdgeLabeling lab(m.edges(), 0);
    int next = 1;
    auto give = [&](int d) {
        int e = RootedMap::edge(d);
        if (!lab[e])
            lab[e] = next++;
    };
    auto tree = [&](int d) { return road.tree_edge[RootedMap::edge(d)] != 0; };

    // Walk around the road keeping it on the left; non-road edges met on the
    // way are crossed, road edges are followed.
    int d = m.root();
    give(d);
    if (m.edges() == 1)
        return lab;
    for (int guard = 0; next <= m.edges(); ++guard) {
        if (guard > 2 * m.darts())
            throw DomainError("road does not span the map");
        int x = m.sigma(d ^ 1);
        while (!tree(x)) {
            give(x);
            x = m.sigma(x);
        }
        give(x);
        d = x;
    }
    return lab;
}

EdgeLabeling label_edges(const RootedMap& m) { return label_edges(m, build_road(m)); }

std::vector<int> edges_by_label(const EdgeLabeling& lab) {
    std::vector<int> out(lab.size() + 1, -1);
    for (int e = 0; e < static_cast<int>(lab.size()); ++e)
        out.at(lab[e]) = e;
    return out;
}

} // namespace bicubic
