#include "bicubic/bijection.hpp"

#include "bicubic/surgery.hpp"

#include <sstream>

namespace bicubic {

PhiResult phi_labelled(const DecoratedPath& p) {
    check_decorated(p);
    auto targets = merge_targets(p.path);
    PhiResult r{p.decorations[0], label_edges(p.decorations[0])};
    for (size_t j = 0; j < targets.size(); ++j) {
        const RootedMap& b = p.decorations[j + 1];
        int at = -1;
        for (int e = 0; e < r.map.edges(); ++e)
            if (r.labels[e] == targets[j])
                at = e;
        if (at < 0)
            throw DomainError("merge target " + std::to_string(targets[j]) + " out of range");
        const int shift = r.map.edges();
        auto own = label_edges(b);
        r.map = glue_at_edge(r.map, at, b);
        for (int l : own)
            r.labels.push_back(l + shift);
        // The two rejoined edges keep the labels of their white halves.
        std::swap(r.labels[at], r.labels[shift + RootedMap::edge(b.root())]);
    }
    return r;
}

RootedMap phi(const DecoratedPath& p) { return phi_labelled(p).map; }

std::vector<MergeStep> merge_steps(const DecoratedPath& p) {
    check_decorated(p);
    auto targets = merge_targets(p.path);
    std::vector<MergeStep> out;
    for (size_t j = 0; j < targets.size(); ++j)
        out.push_back({targets[j], p.decorations[j + 1].edges()});
    return out;
}

namespace {

DecoratedPath single(const RootedMap& m) {
    std::vector<bool> s(m.edges(), true);
    s.insert(s.end(), m.edges(), false);
    return {DyckPath(std::move(s)), {m}};
}

DecoratedPath combine(const DecoratedPath& p1, const Decomposition& d, const DecoratedPath& p2) {
    PhiResult built = phi_labelled(p1);
    auto iso = rooted_isomorphism(d.m1, built.map);
    if (!iso)
        throw DomainError("inverse failed to rebuild the first part");
    int a = built.labels[RootedMap::edge((*iso)[2 * d.distinguished_edge])];
    int at = compose_position(p1.path, a);
    DecoratedPath out{compose(p1.path, a, p2.path), {}};
    auto as = ascents(p1.path);
    size_t i = 0;
    for (; i < as.size() && as[i].start < at; ++i)
        out.decorations.push_back(p1.decorations[i]);
    out.decorations.insert(out.decorations.end(), p2.decorations.begin(), p2.decorations.end());
    for (; i < as.size(); ++i)
        out.decorations.push_back(p1.decorations[i]);
    return out;
}

} // namespace

DecoratedPath phi_inverse(const RootedMap& m, const PrimitiveCatalog* catalog) {
    if (!validate(m).ok())
        throw DomainError("not a rooted bicubic planar map: " + validate(m).describe());
    // Post-order over the decomposition tree.
    struct Frame {
        RootedMap map;
        std::optional<Decomposition> dec;
        int stage = 0;
    };
    std::vector<Frame> work{{m, std::nullopt, 0}};
    std::vector<DecoratedPath> done;
    while (!work.empty()) {
        Frame& f = work.back();
        if (f.stage == 0) {
            if (is_primitive(f.map)) {
                if (catalog && !catalog->handle_of(f.map))
                    throw DomainError("primitive component on " + std::to_string(f.map.vertices()) +
                                      " vertices is not in the catalog");
                done.push_back(single(f.map));
                work.pop_back();
                continue;
            }
            f.dec = decompose(f.map);
            f.stage = 1;
            RootedMap a = f.dec->m1, b = f.dec->m2;
            work.push_back({std::move(b), std::nullopt, 0});
            work.push_back({std::move(a), std::nullopt, 0});
            continue;
        }
        DecoratedPath p2 = std::move(done.back());
        done.pop_back();
        DecoratedPath p1 = std::move(done.back());
        done.pop_back();
        done.push_back(combine(p1, *f.dec, p2));
        work.pop_back();
    }
    return std::move(done.back());
}

long long enumerate_maps(int n, const PrimitiveCatalog& catalog,
                         const std::function<void(const RootedMap&)>& visit) {
    return enumerate_decorated(n, catalog, [&](const DecoratedPath& p) { visit(phi(p)); });
}

std::string format_decorated(const DecoratedPath& p, const PrimitiveCatalog* catalog) {
    std::ostringstream out;
    out << "path " << p.path.str() << "\n";
    for (size_t i = 0; i < p.decorations.size(); ++i) {
        out << "decor " << i + 1 << " ";
        std::optional<std::string> h;
        if (catalog)
            h = catalog->handle_of(p.decorations[i]);
        out << (h ? *h : code_to_string(canonical_code(p.decorations[i]))) << "\n";
    }
    return out.str();
}

DecoratedPath parse_decorated(const std::string& text, const PrimitiveCatalog* catalog) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_path = false;
    DecoratedPath p;
    std::vector<std::optional<RootedMap>> decor;
    auto fail = [&](const std::string& msg) { throw DomainError("line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        if (kw == "path") {
            if (have_path)
                fail("second path line");
            std::string rest;
            std::getline(ls, rest);
            try {
                p.path = DyckPath::parse(rest);
            } catch (const DomainError& e) {
                fail(e.what());
            }
            have_path = true;
            decor.assign(ascents(p.path).size(), std::nullopt);
        } else if (kw == "decor") {
            if (!have_path)
                fail("decor before path");
            int idx = 0;
            if (!(ls >> idx) || idx < 1 || idx > static_cast<int>(decor.size()))
                fail("bad ascent index");
            if (decor[idx - 1])
                fail("ascent " + std::to_string(idx) + " decorated twice");
            std::string rest;
            std::getline(ls, rest);
            auto first = rest.find_first_not_of(" \t");
            if (first == std::string::npos)
                fail("missing primitive");
            rest = rest.substr(first);
            try {
                if (rest[0] == 'P') {
                    if (!catalog)
                        fail("catalog handle without a catalog");
                    decor[idx - 1] = catalog->from_handle(rest.substr(0, rest.find_last_not_of(" \t\r") + 1));
                } else {
                    decor[idx - 1] = map_from_code(code_from_string(rest));
                }
            } catch (const DomainError& e) {
                fail(e.what());
            }
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (!have_path)
        throw DomainError("no path line");
    for (size_t i = 0; i < decor.size(); ++i) {
        if (!decor[i])
            throw DomainError("ascent " + std::to_string(i + 1) + " has no decoration");
        p.decorations.push_back(*decor[i]);
    }
    check_decorated(p);
    return p;
}

} // namespace bicubic
