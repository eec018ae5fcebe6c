#pragma once

#include "bicubic/map.hpp"

#include <vector>

namespace bicubic {

struct RoadStep {
    int dart;     // dart travelled, from its tail to its head
    bool back;    // part of a back-travel segment
};

struct Road {
    std::vector<RoadStep> steps;
    std::vector<int> visit_order;   // vertices, each exactly once
    std::vector<char> tree_edge;    // per edge: used by a forward step
};

// Spanning road from the root: at each vertex take the first edge to an
// unvisited vertex, scanning counterclockwise from the arrival dart; back-travel
// when there is none.
Road build_road(const RootedMap& m);

// label[e] in 1..edges, root edge labelled 1.
using EdgeLabeling = std::vector<int>;

EdgeLabeling label_edges(const RootedMap& m);
EdgeLabeling label_edges(const RootedMap& m, const Road& road);

// Inverse view: edge carrying each label (index 0 unused).
std::vector<int> edges_by_label(const EdgeLabeling& lab);

} // namespace bicubic
