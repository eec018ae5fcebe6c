#include "bicubic/surgery.hpp"

#include <algorithm>
#include <numeric>

namespace bicubic {

RootedMap glue_at_edge(const RootedMap& m, int e, const RootedMap& n) {
    if (e < 0 || e >= m.edges())
        throw DomainError("glue: edge out of range");
    const int off = m.darts();
    const int total = m.darts() + n.darts();
    int a = m.dark(2 * e) ? 2 * e : 2 * e + 1;   // dark half of the target edge
    int b = n.root() + off;                       // dark half of n's root edge

    // Concatenate, then swap the ids of the two white halves so that the
    // pairs become (a, white of n) and (b, white of m).
    std::vector<int> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[a ^ 1], perm[b ^ 1]);
    std::vector<int> s(total);
    for (int d = 0; d < m.darts(); ++d)
        s[perm[d]] = perm[m.sigma(d)];
    for (int d = 0; d < n.darts(); ++d)
        s[perm[d + off]] = perm[n.sigma(d) + off];
    return RootedMap(std::move(s), m.root());
}

RootedMap glue(const RootedMap& m, int label, const RootedMap& n) {
    if (label < 1 || label > m.edges())
        throw DomainError("glue: label " + std::to_string(label) + " out of range 1.." + std::to_string(m.edges()));
    auto byl = edges_by_label(label_edges(m));
    return glue_at_edge(m, byl[label], n);
}

std::optional<int> find_first_cut_edge(const RootedMap& m, const EdgeLabeling& lab) {
    auto cut = cut_edges(m);
    auto byl = edges_by_label(lab);
    for (int l = 1; l <= m.edges(); ++l)
        if (cut[byl[l]])
            return byl[l];
    return std::nullopt;
}

std::optional<int> find_first_cut_edge(const RootedMap& m) { return find_first_cut_edge(m, label_edges(m)); }

namespace {

int find(std::vector<int>& p, int x) {
    while (p[x] != x)
        x = p[x] = p[p[x]];
    return x;
}

// Sub-map on the darts flagged in keep, with one extra pairing x <-> y.
RootedMap extract(const RootedMap& m, const std::vector<char>& keep, int x, int y, int root, std::vector<int>& local) {
    local.assign(m.darts(), -1);
    std::vector<int> ids;
    for (int d = 0; d < m.darts(); ++d)
        if (keep[d]) {
            local[d] = static_cast<int>(ids.size());
            ids.push_back(d);
        }
    const int k = static_cast<int>(ids.size());
    std::vector<int> s(k), a(k);
    for (int i = 0; i < k; ++i) {
        int d = ids[i];
        s[i] = local[m.sigma(d)];
        int p = d == x ? y : d == y ? x : d ^ 1;
        a[i] = local[p];
    }
    std::vector<int> ren;
    RootedMap out = RootedMap::from_permutations(s, a, local[root], &ren);
    for (int& l : local)
        if (l >= 0)
            l = ren[l];
    return out;
}

} // namespace

Decomposition decompose(const RootedMap& m) {
    auto lab = label_edges(m);
    auto first = find_first_cut_edge(m, lab);
    if (!first)
        throw DomainError("decompose: map is primitive");
    const int e = *first;
    auto fo = m.face_of();
    const int f1 = fo[2 * e], f2 = fo[2 * e + 1];
    if (f1 == f2)
        throw DomainError("decompose: bridge in a bicubic map");

    std::vector<char> in_c(m.edges(), 0);
    int csize = 0;
    for (int x = 0; x < m.edges(); ++x) {
        int a = fo[2 * x], b = fo[2 * x + 1];
        if ((a == f1 && b == f2) || (a == f2 && b == f1)) {
            in_c[x] = 1;
            ++csize;
        }
    }

    std::vector<int> parent(m.vertices());
    std::iota(parent.begin(), parent.end(), 0);
    for (int x = 0; x < m.edges(); ++x)
        if (!in_c[x])
            parent[find(parent, m.vertex(2 * x))] = find(parent, m.vertex(2 * x + 1));
    const int rc = find(parent, m.vertex(m.root()));
    auto inside = [&](int d) { return find(parent, m.vertex(d)) == rc; };

    // Edges of C with exactly one end in the root component, in the order met
    // along the boundary of the first face of e starting after e.
    std::vector<int> touching;
    {
        auto faces = m.faces();
        const auto& cyc = faces[f1];
        int at = static_cast<int>(std::find(cyc.begin(), cyc.end(), 2 * e) - cyc.begin());
        if (at == static_cast<int>(cyc.size()))
            at = static_cast<int>(std::find(cyc.begin(), cyc.end(), 2 * e + 1) - cyc.begin());
        for (size_t i = 1; i <= cyc.size(); ++i) {
            int d = cyc[(at + i) % cyc.size()];
            int x = RootedMap::edge(d);
            if (in_c[x] && inside(2 * x) != inside(2 * x + 1) &&
                std::find(touching.begin(), touching.end(), x) == touching.end())
                touching.push_back(x);
        }
    }
    if (std::find(touching.begin(), touching.end(), e) == touching.end())
        throw DomainError("decompose: first cut edge does not leave the root component");
    int partner = -1;
    for (int x : touching)
        if (x != e) {
            partner = x;
            break;
        }
    if (partner < 0)
        throw DomainError("decompose: no partner edge for the cut");

    auto side = [&](int x, bool in) { return inside(2 * x) == in ? 2 * x : 2 * x + 1; };
    const int ex = side(e, true), ey = side(e, false);
    const int px = side(partner, true), py = side(partner, false);

    std::vector<char> keep1(m.darts()), keep2(m.darts());
    for (int d = 0; d < m.darts(); ++d) {
        keep1[d] = inside(d);
        keep2[d] = !inside(d);
    }
    std::vector<int> loc1, loc2;
    RootedMap m1 = extract(m, keep1, ex, px, m.root(), loc1);
    const int r2 = m.dark(ey) ? ey : py;
    RootedMap m2 = extract(m, keep2, ey, py, r2, loc2);

    const int dist = RootedMap::edge(loc1[ex]);
    auto lab1 = label_edges(m1);
    return Decomposition{m1, lab1[dist], dist, m2, e, partner, csize, static_cast<int>(touching.size())};
}

} // namespace bicubic
