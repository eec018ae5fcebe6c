#pragma once

#include "bicubic/map.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bicubic {

// Two-vertex subdivision of the edges of darts x and y, both on the face to
// their right, joined by two chords through that face. The darts must be an
// even number of steps apart along the face.
RootedMap insert4(const RootedMap& m, int x, int y);
// Face given by index into m.faces(); e and e2 are positions on its cycle.
RootedMap insert4_face(const RootedMap& m, int face, int e, int e2);

// Replace vertex v by a hexagon: alternate corners take v's old neighbours,
// the others are joined to v.
RootedMap insert6(const RootedMap& m, int v);

RootedMap theta();
RootedMap prism(int k);
RootedMap truncated_octahedron();
RootedMap construct_asymmetric(int n);

struct CatalogEntry {
    RootedMap map;    // rooted at the dart giving the unrooted code
    Code code;        // unrooted canonical code
    int rootings;
};

class PrimitiveCatalog {
public:
    PrimitiveCatalog() = default;

    int max_vertices() const { return max_vertices_; }
    // Unrooted primitives on the given number of vertices, sorted by code.
    const std::vector<CatalogEntry>& entries(int vertices) const;
    // All rooted primitives on the given number of vertices, sorted by rooted code.
    const std::vector<RootedMap>& rooted(int vertices) const;
    const std::vector<Code>& rooted_codes(int vertices) const;
    long long rooting_sum(int vertices) const;

    // "P<vertices>.<index>" of a rooted primitive, if catalogued.
    std::optional<std::string> handle_of(const RootedMap& m) const;
    RootedMap from_handle(const std::string& handle) const;

    // Adds an unrooted primitive; returns false when already present.
    bool add(const RootedMap& m);
    void set_ceiling(int max_vertices);

    std::string index_text() const;
    std::string size_text(int vertices) const;

private:
    void rebuild_rooted(int vertices);

    int max_vertices_ = 0;
    std::map<int, std::vector<CatalogEntry>> entries_;
    std::map<int, std::vector<RootedMap>> rooted_;
    std::map<int, std::vector<Code>> rooted_codes_;
};

struct CatalogStats {
    std::map<int, long long> insert4_sites, insert6_sites;
    std::map<int, int> from4, from6;   // entries reachable by each route
};

PrimitiveCatalog generate_catalog(int max_vertices, CatalogStats* stats = nullptr);

// Entries with exactly three rootings.
std::vector<CatalogEntry> three_rooting_census(const PrimitiveCatalog& catalog);

} // namespace bicubic
