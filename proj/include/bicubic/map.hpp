#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicubic {

// Raised for inputs outside an operation's domain (bad dart, bad label, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Code = std::vector<int>;

struct ValidationReport {
    bool permutation = false;   // sigma is a bijection on the darts
    bool involution = false;    // alpha is a fixed-point-free involution
    bool connected = false;
    bool genus_zero = false;
    bool cubic = false;
    bool bipartite = false;
    int vertices = 0, edges = 0, faces = 0;

    bool ok() const { return permutation && involution && connected && genus_zero && cubic && bipartite; }
    std::string describe() const;
};

// Oriented combinatorial map with a root dart.
// Darts are 0..2m-1 and alpha(d) = d ^ 1, so edge i owns darts 2i and 2i+1.
// sigma(d) is the next dart counterclockwise around the tail of d.
// Faces are orbits of d -> sigma(alpha(d)); that orbit keeps the face on the right.
class RootedMap {
public:
    RootedMap() = default;
    RootedMap(std::vector<int> sigma, int root);

    // Renumbers darts so that the given involution becomes d ^ 1.
    // old_to_new, when given, receives the renumbering.
    static RootedMap from_permutations(const std::vector<int>& sigma, const std::vector<int>& alpha,
                                       int root, std::vector<int>* old_to_new = nullptr);

    int darts() const { return static_cast<int>(sigma_.size()); }
    int edges() const { return darts() / 2; }
    int vertices() const { return nverts_; }
    int root() const { return root_; }

    int sigma(int d) const { return sigma_[d]; }
    int sigma_inv(int d) const { return sinv_[d]; }
    static int alpha(int d) { return d ^ 1; }
    int face_next(int d) const { return sigma_[d ^ 1]; }
    int vertex(int d) const { return vert_[d]; }
    int head(int d) const { return vert_[d ^ 1]; }
    static int edge(int d) { return d >> 1; }

    const std::vector<int>& sigma_table() const { return sigma_; }

    // Rotation (ccw dart cycle) at each vertex, starting from its smallest dart.
    std::vector<std::vector<int>> vertex_cycles() const;
    // Face cycles; the first one is the root face.
    std::vector<std::vector<int>> faces() const;
    // Face index of every dart, consistent with faces().
    std::vector<int> face_of() const;

    // 2-colouring with the root vertex dark; empty when the graph is not bipartite.
    std::vector<char> dark_vertices() const;
    bool dark(int d) const;

    RootedMap reroot(int d) const;

private:
    std::vector<int> sigma_, sinv_, vert_;
    int root_ = 0;
    int nverts_ = 0;
    std::vector<char> dark_;
    bool bip_ = false;
};

ValidationReport validate(const RootedMap& m);
// Validates arbitrary permutations, before any normalisation.
ValidationReport validate(const std::vector<int>& sigma, const std::vector<int>& alpha);

RootedMap dual(const RootedMap& m);

// No bridge and no pair of edges separating the map.
bool is_primitive(const RootedMap& m);

// Edges that lie in some 2-edge cut (including bridges), as a per-edge flag.
std::vector<char> cut_edges(const RootedMap& m);

Code canonical_code(const RootedMap& m);
RootedMap map_from_code(const Code& code);
// Minimum over all rootings.
Code unrooted_code(const RootedMap& m);
int count_rootings(const RootedMap& m);
// Distinct rooted codes, sorted, over all rootings of m.
std::vector<Code> rooted_codes(const RootedMap& m);

bool rooted_isomorphic(const RootedMap& a, const RootedMap& b);
// Dart correspondence a -> b of the unique rooted isomorphism, if one exists.
std::optional<std::vector<int>> rooted_isomorphism(const RootedMap& a, const RootedMap& b);

// Text format: header, dart count, root, one ccw rotation per vertex, 1-based darts.
std::string to_text(const RootedMap& m);
RootedMap parse_map(const std::string& text);
std::vector<RootedMap> parse_maps(const std::string& text);

std::string code_to_string(const Code& c);
Code code_from_string(const std::string& s);

} // namespace bicubic
