#pragma once

#include "bicubic/labeling.hpp"
#include "bicubic/map.hpp"

#include <optional>

namespace bicubic {

// Glue n into the face to the right of edge e of m (dark to white), with n's
// root face outermost. Edge indices are kept: edges of m stay 0..m.edges()-1,
// edge i of n becomes m.edges()+i. The edge of m keeps its index on the half
// joined to m's dark end; n's root edge keeps its index on n's dark end.
RootedMap glue_at_edge(const RootedMap& m, int e, const RootedMap& n);

// Same, addressing the edge of m by its label under label_edges(m).
RootedMap glue(const RootedMap& m, int label, const RootedMap& n);

// First edge, in label order, lying in some 2-edge cut; none when primitive.
std::optional<int> find_first_cut_edge(const RootedMap& m);
std::optional<int> find_first_cut_edge(const RootedMap& m, const EdgeLabeling& lab);

struct Decomposition {
    RootedMap m1;               // holds the root of the input
    int distinguished_label;    // label of the rejoined edge under label_edges(m1)
    int distinguished_edge;     // that edge's index in m1
    RootedMap m2;               // rooted at its rejoined edge, dark end first
    int cut_edge, partner_edge; // e and e' in the input
    int cut_set_size;           // |C|
    int partner_candidates;     // edges of C touching the root component
};

Decomposition decompose(const RootedMap& m);

} // namespace bicubic
