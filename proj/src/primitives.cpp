#include "bicubic/primitives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <sstream>

namespace bicubic {

namespace {

// Mutable sigma/alpha pair for local surgery; normalised on the way out.
struct Surgery {
    std::vector<int> sigma, alpha;

    explicit Surgery(const RootedMap& m) : sigma(m.sigma_table()), alpha(m.darts()) {
        for (int d = 0; d < m.darts(); ++d)
            alpha[d] = d ^ 1;
    }
    int dart() {
        sigma.push_back(-1);
        alpha.push_back(-1);
        return static_cast<int>(sigma.size()) - 1;
    }
    void pair(int a, int b) {
        alpha[a] = b;
        alpha[b] = a;
    }
    void rotation(std::initializer_list<int> ds) {
        std::vector<int> v(ds);
        for (size_t i = 0; i < v.size(); ++i)
            sigma[v[i]] = v[(i + 1) % v.size()];
    }
    RootedMap build(int root) const { return RootedMap::from_permutations(sigma, alpha, root); }
};

} // namespace

RootedMap insert4(const RootedMap& m, int x, int y) {
    if (x < 0 || y < 0 || x >= m.darts() || y >= m.darts())
        throw DomainError("insert4: dart out of range");
    if (RootedMap::edge(x) == RootedMap::edge(y))
        throw DomainError("insert4: the two edges coincide");
    int steps = 0;
    for (int d = m.face_next(x); d != x; d = m.face_next(d)) {
        ++steps;
        if (d == y)
            break;
    }
    int len = 1;
    for (int d = m.face_next(x); d != x; d = m.face_next(d))
        ++len;
    if (steps >= len)
        throw DomainError("insert4: edges are not on a common face");
    if (steps % 2 != 0)
        throw DomainError("insert4: edges must be joined by an odd number of edges along the face");

    Surgery s(m);
    const int xr = x ^ 1, yr = y ^ 1;
    // Subdivision vertices: s1 s2 on x (tail to head), t1 t2 on y.
    // Each has darts forward, backward, chord; rotation (forward, backward, chord)
    // puts the chord inside the face on the right.
    std::array<int, 3> s1{s.dart(), s.dart(), s.dart()}, s2{s.dart(), s.dart(), s.dart()};
    std::array<int, 3> t1{s.dart(), s.dart(), s.dart()}, t2{s.dart(), s.dart(), s.dart()};
    for (auto* v : {&s1, &s2, &t1, &t2})
        s.rotation({(*v)[0], (*v)[1], (*v)[2]});
    s.pair(x, s1[1]);
    s.pair(s1[0], s2[1]);
    s.pair(s2[0], xr);
    s.pair(y, t1[1]);
    s.pair(t1[0], t2[1]);
    s.pair(t2[0], yr);
    s.pair(s2[2], t1[2]);
    s.pair(s1[2], t2[2]);
    return s.build(m.root());
}

RootedMap insert4_face(const RootedMap& m, int face, int e, int e2) {
    auto fs = m.faces();
    if (face < 0 || face >= static_cast<int>(fs.size()))
        throw DomainError("insert4: face out of range");
    const auto& cyc = fs[face];
    const int len = static_cast<int>(cyc.size());
    if (e < 0 || e2 < 0 || e >= len || e2 >= len)
        throw DomainError("insert4: edge position out of range for face of length " + std::to_string(len));
    return insert4(m, cyc[e], cyc[e2]);
}

RootedMap insert6(const RootedMap& m, int v) {
    if (v < 0 || v >= m.vertices())
        throw DomainError("insert6: vertex out of range");
    auto cyc = m.vertex_cycles()[v];
    if (cyc.size() != 3)
        throw DomainError("insert6: vertex must have degree 3");

    Surgery s(m);
    // Hexagon corners h[0..5] counterclockwise; even corners face old
    // neighbours (out, next, prev), odd corners face v (next, in, prev).
    std::array<std::array<int, 3>, 6> h;
    for (auto& c : h)
        c = {s.dart(), s.dart(), s.dart()};
    for (auto& c : h)
        s.rotation({c[0], c[1], c[2]});
    for (int i = 0; i < 3; ++i) {
        int d = cyc[i];
        int far = d ^ 1;
        s.pair(far, h[2 * i][0]);
        s.pair(d, h[2 * i + 1][1]);
    }
    for (int k = 0; k < 6; ++k) {
        int nx = k % 2 == 0 ? h[k][1] : h[k][0];
        auto& nxt = h[(k + 1) % 6];
        s.pair(nx, nxt[2]);
    }
    return s.build(m.root());
}

RootedMap theta() { return RootedMap({2, 5, 4, 1, 0, 3}, 0); }

RootedMap prism(int k) {
    if (k < 4 || k % 2 != 0)
        throw DomainError("prism: k must be even and at least 4");
    std::vector<int> s(6 * k);
    auto outer = [&](int j) { return 2 * (((j % k) + k) % k); };
    auto inner = [&](int j) { return 2 * (k + ((j % k) + k) % k); };
    auto spoke = [&](int j) { return 2 * (2 * k + ((j % k) + k) % k); };
    auto rot = [&](int a, int b, int c) {
        s[a] = b;
        s[b] = c;
        s[c] = a;
    };
    for (int j = 0; j < k; ++j) {
        rot(outer(j), spoke(j), outer(j - 1) + 1);
        rot(spoke(j) + 1, inner(j), inner(j - 1) + 1);
    }
    return RootedMap(std::move(s), 0);
}

RootedMap truncated_octahedron() {
    using V = std::array<int, 3>;
    std::vector<V> pts;
    std::array<int, 3> base{0, 1, 2};
    do {
        for (int sa : {-1, 1})
            for (int sb : {-1, 1}) {
                V p{};
                for (int i = 0; i < 3; ++i) {
                    int v = base[i];
                    p[i] = v == 1 ? sa * v : v == 2 ? sb * v : 0;
                }
                pts.push_back(p);
            }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int nv = static_cast<int>(pts.size());

    auto dist2 = [&](const V& a, const V& b) {
        int s = 0;
        for (int i = 0; i < 3; ++i)
            s += (a[i] - b[i]) * (a[i] - b[i]);
        return s;
    };
    std::vector<std::vector<int>> at(nv);
    int nd = 0;
    std::vector<int> head;
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            if (dist2(pts[a], pts[b]) == 2) {
                at[a].push_back(nd);
                head.push_back(b);
                at[b].push_back(nd + 1);
                head.push_back(a);
                nd += 2;
            }

    // Counterclockwise as seen from outside: sort by angle in the tangent plane.
    std::vector<int> s(nd);
    for (int a = 0; a < nv; ++a) {
        const V& p = pts[a];
        double n[3] = {double(p[0]), double(p[1]), double(p[2])};
        double u[3];
        int k = std::abs(p[0]) < 1 ? 0 : (std::abs(p[1]) < 1 ? 1 : 2);
        double ek[3] = {0, 0, 0};
        ek[k] = 1;
        double dot = n[k] / (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        for (int i = 0; i < 3; ++i)
            u[i] = ek[i] - dot * n[i];
        double w[3] = {n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};
        auto angle = [&](int d) {
            const V& q = pts[head[d]];
            double v[3] = {double(q[0] - p[0]), double(q[1] - p[1]), double(q[2] - p[2])};
            return std::atan2(v[0] * w[0] + v[1] * w[1] + v[2] * w[2], v[0] * u[0] + v[1] * u[1] + v[2] * u[2]);
        };
        auto ds = at[a];
        std::sort(ds.begin(), ds.end(), [&](int x, int y) { return angle(x) < angle(y); });
        for (size_t i = 0; i < ds.size(); ++i)
            s[ds[i]] = ds[(i + 1) % ds.size()];
    }
    return RootedMap(std::move(s), 0);
}

RootedMap construct_asymmetric(int n) {
    if (n < 9 || n == 10)
        throw DomainError("asymmetric primitives exist for n = 9 and n >= 11");
    if (n % 2 == 1)
        return insert6(prism(n - 3), 0);
    const int k = n - 2;
    RootedMap p = prism(k);
    // One k-face of the prism, split into (k-2)-, 4- and 6-faces.
    auto fs = p.faces();
    for (const auto& cyc : fs)
        if (static_cast<int>(cyc.size()) == k)
            return insert4(p, cyc[0], cyc[k - 4]);
    throw DomainError("prism has no k-face");
}

const std::vector<CatalogEntry>& PrimitiveCatalog::entries(int vertices) const {
    static const std::vector<CatalogEntry> none;
    auto it = entries_.find(vertices);
    return it == entries_.end() ? none : it->second;
}

const std::vector<RootedMap>& PrimitiveCatalog::rooted(int vertices) const {
    static const std::vector<RootedMap> none;
    auto it = rooted_.find(vertices);
    return it == rooted_.end() ? none : it->second;
}

const std::vector<Code>& PrimitiveCatalog::rooted_codes(int vertices) const {
    static const std::vector<Code> none;
    auto it = rooted_codes_.find(vertices);
    return it == rooted_codes_.end() ? none : it->second;
}

long long PrimitiveCatalog::rooting_sum(int vertices) const {
    long long s = 0;
    for (auto& e : entries(vertices))
        s += e.rootings;
    return s;
}

void PrimitiveCatalog::rebuild_rooted(int vertices) {
    std::vector<Code> codes;
    for (auto& e : entries_[vertices]) {
        auto rc = bicubic::rooted_codes(e.map);
        codes.insert(codes.end(), rc.begin(), rc.end());
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<RootedMap> maps;
    maps.reserve(codes.size());
    for (auto& c : codes)
        maps.push_back(map_from_code(c));
    rooted_codes_[vertices] = std::move(codes);
    rooted_[vertices] = std::move(maps);
}

bool PrimitiveCatalog::add(const RootedMap& m) {
    auto& list = entries_[m.vertices()];
    Code c = unrooted_code(m);
    auto it = std::lower_bound(list.begin(), list.end(), c,
                               [](const CatalogEntry& e, const Code& key) { return e.code < key; });
    if (it != list.end() && it->code == c)
        return false;
    RootedMap rep = map_from_code(c);
    int r = count_rootings(rep);
    list.insert(it, CatalogEntry{std::move(rep), std::move(c), r});
    rebuild_rooted(m.vertices());
    return true;
}

void PrimitiveCatalog::set_ceiling(int max_vertices) { max_vertices_ = max_vertices; }

std::optional<std::string> PrimitiveCatalog::handle_of(const RootedMap& m) const {
    const auto& codes = rooted_codes(m.vertices());
    Code c = canonical_code(m);
    auto it = std::lower_bound(codes.begin(), codes.end(), c);
    if (it == codes.end() || *it != c)
        return std::nullopt;
    return "P" + std::to_string(m.vertices()) + "." + std::to_string(it - codes.begin());
}

RootedMap PrimitiveCatalog::from_handle(const std::string& handle) const {
    int v = 0, i = 0;
    char p = 0, dot = 0;
    std::istringstream in(handle);
    if (!(in >> p >> v >> dot >> i) || p != 'P' || dot != '.')
        throw DomainError("malformed primitive handle '" + handle + "'");
    std::string rest;
    if (in >> rest)
        throw DomainError("malformed primitive handle '" + handle + "'");
    const auto& list = rooted(v);
    if (i < 0 || i >= static_cast<int>(list.size()))
        throw DomainError("no catalogued primitive " + handle);
    return list[i];
}

std::string PrimitiveCatalog::index_text() const {
    std::ostringstream out;
    for (auto& [v, list] : entries_) {
        out << "size " << v << "\n";
        for (auto& e : list)
            out << code_to_string(e.code) << " " << e.rootings << "\n";
    }
    return out.str();
}

std::string PrimitiveCatalog::size_text(int vertices) const {
    std::string out;
    for (auto& e : entries(vertices))
        out += to_text(e.map);
    return out;
}

PrimitiveCatalog generate_catalog(int max_vertices, CatalogStats* stats) {
    if (max_vertices < 2)
        throw DomainError("catalog ceiling must be at least 2");
    PrimitiveCatalog cat;
    cat.set_ceiling(max_vertices);
    cat.add(theta());
    for (int v = 4; v <= max_vertices; v += 2) {
        std::set<Code> via4, via6;
        std::vector<RootedMap> found;
        long long sites4 = 0, sites6 = 0;
        auto take = [&](RootedMap&& m, std::set<Code>& route) {
            if (!is_primitive(m) || !validate(m).ok())
                throw DomainError("insertion produced a non-primitive map");
            Code c = unrooted_code(m);
            if (route.insert(c).second)
                found.push_back(std::move(m));
        };
        for (auto& e : cat.entries(v - 4)) {
            auto fs = e.map.faces();
            for (auto& cyc : fs) {
                const int len = static_cast<int>(cyc.size());
                for (int i = 0; i < len; ++i)
                    for (int j = i + 2; j < len; j += 2) {
                        ++sites4;
                        take(insert4(e.map, cyc[i], cyc[j]), via4);
                    }
            }
        }
        for (auto& e : cat.entries(v - 6))
            for (int x = 0; x < e.map.vertices(); ++x) {
                ++sites6;
                take(insert6(e.map, x), via6);
            }
        for (auto& m : found)
            cat.add(m);
        if (stats) {
            stats->insert4_sites[v] = sites4;
            stats->insert6_sites[v] = sites6;
            stats->from4[v] = static_cast<int>(via4.size());
            stats->from6[v] = static_cast<int>(via6.size());
        }
    }
    return cat;
}

std::vector<CatalogEntry> three_rooting_census(const PrimitiveCatalog& catalog) {
    std::vector<CatalogEntry> out;
    for (int v = 2; v <= catalog.max_vertices(); v += 2)
        for (auto& e : catalog.entries(v))
            if (e.rootings == 3)
                out.push_back(e);
    return out;
}

} // namespace bicubic
