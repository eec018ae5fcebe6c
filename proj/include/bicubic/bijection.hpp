#pragma once

#include "bicubic/dyck.hpp"
#include "bicubic/labeling.hpp"
#include "bicubic/map.hpp"
#include "bicubic/primitives.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bicubic {

struct PhiResult {
    RootedMap map;
    // Labels carried through the folding: each block keeps its own labels,
    // shifted by the edge count of the map it is glued into; a rejoined edge
    // takes the label of its white half.
    EdgeLabeling labels;
};

PhiResult phi_labelled(const DecoratedPath& p);
RootedMap phi(const DecoratedPath& p);

// With a catalog, every primitive component must be catalogued.
DecoratedPath phi_inverse(const RootedMap& m, const PrimitiveCatalog* catalog = nullptr);

// One step of the inverse: the gluing that rebuilds m.
struct MergeStep {
    int label;          // in the labelling carried by phi of the first part
    int block_edges;    // edges of the piece glued on
};
// Merge steps in folding order for phi(p).
std::vector<MergeStep> merge_steps(const DecoratedPath& p);

long long enumerate_maps(int n, const PrimitiveCatalog& catalog,
                         const std::function<void(const RootedMap&)>& visit);

// "path U3D2U3D4" then "decor <ascent, 1-based> <P<v>.<i> | code>" lines.
std::string format_decorated(const DecoratedPath& p, const PrimitiveCatalog* catalog = nullptr);
DecoratedPath parse_decorated(const std::string& text, const PrimitiveCatalog* catalog = nullptr);

} // namespace bicubic
