// One line per acceptance criterion; exit status 1 if any fails.
#include "support/common.hpp"
#include "support/drawing.hpp"

#include "bicubic/series.hpp"
#include "bicubic/surgery.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>

using namespace bicubic;

namespace {

int failures = 0;

struct Check {
    std::string why;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

void run(const std::string& id, const std::string& title, const std::function<void(Check&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << (c.ok ? "PASS " : "FAIL ") << id << " " << title << " (" << buf << ")";
    if (!c.ok) {
        std::cout << ": " << c.why;
        ++failures;
    }
    std::cout << std::endl;
}

std::string str(const BigInt& v) { return v.str(); }

void round_trips(Check& c, int n, const PrimitiveCatalog& cat) {
    std::set<Code> codes;
    long long count = enumerate_decorated(n, cat, [&](const DecoratedPath& p) {
        RootedMap m = phi(p);
        c.expect(validate(m).ok() && m.vertices() == 2 * n, "invalid map from " + p.path.str());
        codes.insert(canonical_code(m));
        DecoratedPath q = phi_inverse(m, &cat);
        c.expect(q == p, "path round trip failed for " + p.path.str());
        c.expect(rooted_isomorphic(phi(q), m), "map round trip failed for " + p.path.str());
    });
    c.expect(BigInt(count) == f_closed(n), "n=" + std::to_string(n) + ": " + std::to_string(count) + " paths");
    c.expect(BigInt(codes.size()) == f_closed(n),
             "n=" + std::to_string(n) + ": " + std::to_string(codes.size()) + " distinct maps");
}

} // namespace

int main(int argc, char** argv) {
    bool slow = argc > 1 && std::strcmp(argv[1], "--slow") == 0;
    if (slow) {
        run("6-slow", "round trips and distinct codes for n = 6", [](Check& c) {
            auto cat = generate_catalog(12);
            round_trips(c, 6, cat);
        });
        return failures ? 1 : 0;
    }

    run("1", "f_1..f_10 exact", [](Check& c) {
        std::vector<long> want{1, 3, 12, 56, 288, 1584, 9152, 54912, 339456, 2149888};
        auto got = f_sequence(10);
        for (int i = 0; i < 10; ++i)
            c.expect(got[i] == want[i], "f_" + std::to_string(i + 1) + " = " + str(got[i]));
    });

    run("2", "g_1..g_15 via partial Bell polynomials", [](Check& c) {
        std::vector<long> want{1, 0, 0, 1, 0, 3, 7, 15, 63, 168, 561, 1881, 6110, 21087, 72174};
        auto got = g_sequence(15);
        for (int i = 0; i < 15; ++i)
            c.expect(got[i] == want[i], "g_" + std::to_string(i + 1) + " = " + str(got[i]));
    });

    run("3", "F(x) = G(x(1+F(x))^3) through order 15", [](Check& c) {
        c.expect(verify_functional_equation(15), "coefficients differ");
    });

    run("4", "labelings of theta, cube and three rooted 6-prisms", [](Check& c) {
        using Names = std::vector<std::pair<std::string, std::string>>;
        c.expect(label_edges(fixture::theta().build()) == EdgeLabeling{1, 2, 3}, "theta");
        auto same = [&](const fixture::Drawing& d, const Names& names, const std::string& what) {
            c.expect(label_edges(d.build()) == fixture::labels_by_edge(d, names), what);
        };
        same(fixture::prism(4, "B3", "B4"),
             {{"B3", "B4"}, {"B4", "B1"}, {"B1", "B2"}, {"B2", "B3"}, {"A2", "B2"}, {"A2", "A3"},
              {"A3", "B3"}, {"A3", "A4"}, {"A4", "B4"}, {"A4", "A1"}, {"A1", "B1"}, {"A1", "A2"}},
             "cube");
        same(fixture::prism(6, "B4", "B5"),
             {{"B4", "B5"}, {"B5", "B6"}, {"B6", "B1"}, {"B1", "B2"}, {"B2", "B3"}, {"B3", "B4"},
              {"A3", "B3"}, {"A3", "A4"}, {"A4", "B4"}, {"A4", "A5"}, {"A5", "B5"}, {"A5", "A6"},
              {"A6", "B6"}, {"A6", "A1"}, {"A1", "B1"}, {"A1", "A2"}, {"A2", "B2"}, {"A2", "A3"}},
             "6-prism B4-B5");
        same(fixture::prism(6, "B4", "A4"),
             {{"B4", "A4"}, {"A4", "A5"}, {"A5", "B5"}, {"B4", "B5"}, {"B5", "B6"}, {"B6", "B1"},
              {"B1", "B2"}, {"B2", "B3"}, {"B3", "B4"}, {"A3", "B3"}, {"A3", "A4"}, {"A2", "A3"},
              {"A1", "A2"}, {"A6", "A1"}, {"A5", "A6"}, {"A6", "B6"}, {"A1", "B1"}, {"A2", "B2"}},
             "6-prism B4-A4");
        same(fixture::prism(6, "B4", "B3"),
             {{"B4", "B3"}, {"A3", "B3"}, {"A3", "A4"}, {"A4", "B4"}, {"A4", "A5"}, {"A5", "B5"},
              {"B4", "B5"}, {"B5", "B6"}, {"B6", "B1"}, {"B1", "B2"}, {"B2", "B3"}, {"A2", "B2"},
              {"A2", "A3"}, {"A1", "A2"}, {"A6", "A1"}, {"A5", "A6"}, {"A6", "B6"}, {"A1", "B1"}},
             "6-prism B4-B3");
    });

    run("5", "the 12 rooted maps on 6 vertices decode and encode", [](Check& c) {
        const char* rows[][2] = {{"U3DU3DU3D7", "14"},   {"U3DU3D2U3D6", "15"},  {"U3DU3D3U3D5", "16"},
                                 {"U3DU3D4U3D4", "12"},  {"U3DU3D5U3D3", "13"},  {"U3D2U3DU3D6", "24"},
                                 {"U3D2U3D2U3D5", "25"}, {"U3D2U3D3U3D4", "26"}, {"U3D2U3D4U3D3", "23"},
                                 {"U3D3U3DU3D5", "34"},  {"U3D3U3D2U3D4", "35"}, {"U3D3U3D3U3D3", "36"}};
        std::set<Code> codes;
        for (auto& r : rows) {
            std::string tag = r[1];
            RootedMap drawn = tag == "14"   ? fixture::hexagon_doubled(fixture::HexRoot::single).build()
                              : tag == "24" ? fixture::hexagon_doubled(fixture::HexRoot::inner).build()
                              : tag == "34" ? fixture::hexagon_doubled(fixture::HexRoot::outer).build()
                                            : fixture::ladder(tag).build();
            RootedMap m = phi(fixture::with_thetas(r[0]));
            c.expect(validate(m).ok() && m.vertices() == 6, std::string(r[0]) + " invalid");
            c.expect(rooted_isomorphic(m, drawn), std::string(r[0]) + " differs from the drawn rooting");
            c.expect(phi_inverse(drawn).path.str() == r[0], std::string(r[0]) + " does not re-encode");
            Decomposition d = decompose(drawn);
            c.expect(rooted_isomorphic(glue(d.m1, d.distinguished_label, d.m2), drawn),
                     std::string(r[0]) + " gluing arguments do not rebuild it");
            codes.insert(canonical_code(m));
        }
        c.expect(codes.size() == 12, std::to_string(codes.size()) + " distinct maps");
    });

    run("6", "round trips and distinct codes for n <= 5", [](Check& c) {
        auto cat = generate_catalog(10);
        for (int n = 1; n <= 5; ++n)
            round_trips(c, n, cat);
    });

    run("7", "28-vertex example: round trip and merges 6, 11, 25", [](Check& c) {
        DecoratedPath p{DyckPath::parse("U18D6U3D8U18D4U3D24"),
                        {fixture::prism(6, "B4", "B3").build(), theta(), fixture::prism(6, "B4", "A4").build(), theta()}};
        c.expect(parse_decorated(fixture::read_file("large.path")) == p, "fixture file differs");
        RootedMap m = phi(p);
        c.expect(validate(m).ok() && m.vertices() == 28, "not a valid 28-vertex map");
        DecoratedPath q = phi_inverse(m);
        c.expect(q == p, "re-encoding gives " + q.path.str());
        std::vector<int> labels;
        for (auto& s : merge_steps(q))
            labels.push_back(s.label);
        c.expect(labels == std::vector<int>{6, 11, 25}, "merge labels differ");
        // Peel the decomposition down to primitives.
        std::vector<RootedMap> todo{m};
        std::multiset<int> sizes;
        while (!todo.empty()) {
            RootedMap x = todo.back();
            todo.pop_back();
            if (is_primitive(x)) {
                sizes.insert(x.vertices());
                continue;
            }
            Decomposition d = decompose(x);
            todo.push_back(d.m1);
            todo.push_back(d.m2);
        }
        c.expect(sizes == std::multiset<int>{2, 2, 12, 12}, "components differ");
    });

    std::optional<PrimitiveCatalog> cat24;
    run("8", "catalog to 24 vertices: rooting sums equal g_n; 4, 6, 10 empty", [&](Check& c) {
        cat24 = generate_catalog(24);
        for (int v = 2; v <= 24; v += 2)
            c.expect(BigInt(cat24->rooting_sum(v)) == g_bell(v / 2),
                     "size " + std::to_string(v) + ": " + std::to_string(cat24->rooting_sum(v)));
        for (int v : {4, 6, 10})
            c.expect(cat24->entries(v).empty(), "size " + std::to_string(v) + " not empty");
        for (int v = 2; v <= 24; v += 2)
            for (auto& e : cat24->entries(v))
                c.expect(is_primitive(e.map) && validate(e.map).ok(), "non-primitive entry");
    });

    run("8-ext", "catalog to 26 vertices: 6110 rootings at 26", [](Check& c) {
        auto cat = generate_catalog(26);
        c.expect(cat.rooting_sum(26) == 6110, std::to_string(cat.rooting_sum(26)));
    });

    run("9", "rooting counts, three-rooting census, odd-n minimum", [&](Check& c) {
        c.expect(count_rootings(prism(4)) == 1, "cube");
        c.expect(count_rootings(prism(6)) == 3, "6-prism");
        c.expect(count_rootings(prism(8)) == 3, "8-prism");
        c.expect(count_rootings(truncated_octahedron()) == 3, "truncated octahedron");
        c.expect(count_rootings(fixture::load("asym18.map")) == 54, "18-vertex map");
        for (int n : {9, 11, 12, 13})
            c.expect(count_rootings(construct_asymmetric(n)) == 6 * n, "asymmetric n=" + std::to_string(n));
        if (!cat24)
            cat24 = generate_catalog(24);
        Code to = unrooted_code(truncated_octahedron());
        bool saw_to = false;
        for (auto& e : three_rooting_census(*cat24)) {
            int k = e.map.vertices() / 2;
            bool is_prism = k % 2 == 0 && k >= 4 && e.code == unrooted_code(prism(k));
            saw_to = saw_to || e.code == to;
            c.expect(is_prism || e.code == to, "unexpected three-rooting map on " + std::to_string(e.map.vertices()));
        }
        c.expect(saw_to, "truncated octahedron missing from the census");
        for (int n : {7, 9, 11}) {
            int least = 1 << 30;
            for (auto& e : cat24->entries(2 * n))
                least = std::min(least, e.rootings);
            c.expect(least >= 4 && least < (1 << 30), "n=" + std::to_string(n) + " minimum " + std::to_string(least));
        }
    });

    run("10", "Euler, glue additivity, dual involution, partial Bell oracle", [](Check& c) {
        std::vector<RootedMap> maps{theta(), prism(4), prism(8), truncated_octahedron(), construct_asymmetric(12)};
        for (int n = 1; n <= 4; ++n)
            for (auto& m : fixture::all_maps(n))
                maps.push_back(m);
        for (auto& m : maps) {
            int f = static_cast<int>(m.faces().size());
            c.expect(m.vertices() - m.edges() + f == 2 && f == m.vertices() / 2 + 2, "Euler");
            c.expect(rooted_isomorphic(dual(dual(m)), m), "dual");
        }
        for (auto& m : {theta(), prism(4), prism(6)})
            for (int l = 1; l <= m.edges(); ++l) {
                RootedMap g = glue(m, l, prism(4));
                c.expect(g.edges() == m.edges() + 12 && validate(g).ok(), "glue");
            }
        std::vector<Rational> x{Rational(3), Rational(1, 2), Rational(-2), Rational(5, 7), Rational(4), Rational(-1, 3), Rational(6)};
        for (int n = 1; n <= 7; ++n)
            for (int k = 1; k <= n; ++k) {
                // Brute force over restricted growth strings.
                Rational total = 0;
                std::vector<int> a(n, 0);
                std::function<void(int, int)> go = [&](int i, int used) {
                    if (i == n) {
                        if (used != k)
                            return;
                        std::vector<int> size(k, 0);
                        for (int b : a)
                            ++size[b];
                        Rational p = 1;
                        for (int s : size)
                            p *= x[s - 1];
                        total += p;
                        return;
                    }
                    for (int b = 0; b <= used && b < k; ++b) {
                        a[i] = b;
                        go(i + 1, std::max(used, b + 1));
                    }
                };
                go(0, 0);
                c.expect(partial_bell(n, k, x) == total, "B_{" + std::to_string(n) + "," + std::to_string(k) + "}");
            }
    });

    return failures ? 1 : 0;
}
