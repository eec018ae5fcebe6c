#include "bicubic/bijection.hpp"
#include "bicubic/labeling.hpp"
#include "bicubic/primitives.hpp"
#include "bicubic/series.hpp"
#include "bicubic/surgery.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

using namespace bicubic;
namespace fs = std::filesystem;

namespace {

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

RootedMap read_map(const std::string& path) {
    try {
        return parse_map(slurp(path));
    } catch (const DomainError& e) {
        throw DomainError(path + ": " + e.what());
    }
}

int largest_handle(const std::string& text) {
    static const std::regex handle(R"(\bP(\d+)\.\d+)");
    int most = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), handle); it != std::sregex_iterator(); ++it)
        most = std::max(most, std::stoi((*it)[1]));
    return most;
}

int largest_component(const RootedMap& m) {
    if (is_primitive(m))
        return m.vertices();
    auto d = decompose(m);
    return std::max(largest_component(d.m1), largest_component(d.m2));
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    if (!out)
        throw DomainError("cannot write " + p.string());
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rooted bicubic planar maps: labelling, surgery, Dyck path encoding, primitive catalogues"};
    app.require_subcommand(1);

    std::string map_a, map_b, path_file, dir, which, method = "bell";
    int label = 0, n = 0, max_vertices = 24;
    bool count_only = false, handles = false;

    auto* label_cmd = app.add_subcommand("label", "Print edge labels as '<edge> <label>', edge named by its smaller dart");
    label_cmd->add_option("map", map_a)->required();

    auto* glue_cmd = app.add_subcommand("glue", "Glue N into M at the edge with the given label");
    glue_cmd->add_option("M", map_a)->required();
    glue_cmd->add_option("label", label)->required();
    glue_cmd->add_option("N", map_b)->required();

    auto* dec_cmd = app.add_subcommand("decompose", "Split a non-primitive map at its first 2-edge cut");
    dec_cmd->add_option("map", map_a)->required();

    auto* enc_cmd = app.add_subcommand("encode", "Map to decorated Dyck path");
    enc_cmd->add_option("map", map_a)->required();
    enc_cmd->add_flag("--handles", handles, "Name decorations by catalogue handle");

    auto* decode_cmd = app.add_subcommand("decode", "Decorated Dyck path to map");
    decode_cmd->add_option("path", path_file)->required();

    auto* paths_cmd = app.add_subcommand("paths", "Decorated Dyck paths of semilength 3n");
    paths_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 12));
    paths_cmd->add_flag("--count-only", count_only);

    auto* prim_cmd = app.add_subcommand("primitives", "Generate the primitive catalogue");
    prim_cmd->add_option("--max-vertices", max_vertices)->check(CLI::Range(2, 40));
    prim_cmd->add_option("--out", dir, "Directory for index.txt and size-<v>.map files");

    auto* root_cmd = app.add_subcommand("rootings", "Number of distinct rootings");
    root_cmd->add_option("map", map_a)->required();

    auto* asym_cmd = app.add_subcommand("asymmetric", "Primitive on 2n vertices with 6n rootings");
    asym_cmd->add_option("--n", n)->required();

    auto* seq_cmd = app.add_subcommand("seq", "Print f_1..f_n or g_1..g_n");
    seq_cmd->add_option("which", which)->required()->check(CLI::IsMember({"f", "g"}));
    seq_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 200));
    seq_cmd->add_option("--method", method)->check(CLI::IsMember({"bell", "catalog"}));

    auto* verify_cmd = app.add_subcommand("verify", "Round trips and counts for semilength 3n");
    verify_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 7));

    auto* check_cmd = app.add_subcommand("check", "Parse and validate .map and .path files");
    check_cmd->add_option("target", dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*label_cmd) {
            auto m = read_map(map_a);
            auto byl = edges_by_label(label_edges(m));
            for (int l = 1; l <= m.edges(); ++l)
                std::cout << 2 * byl[l] + 1 << " " << l << "\n";
        } else if (*glue_cmd) {
            std::cout << to_text(glue(read_map(map_a), label, read_map(map_b)));
        } else if (*dec_cmd) {
            auto d = decompose(read_map(map_a));
            std::cout << "distinguished " << d.distinguished_label << "\n" << to_text(d.m1) << to_text(d.m2);
        } else if (*enc_cmd) {
            auto m = read_map(map_a);
            if (handles) {
                auto cat = generate_catalog(std::max(2, largest_component(m)));
                std::cout << format_decorated(phi_inverse(m, &cat), &cat);
            } else {
                std::cout << format_decorated(phi_inverse(m));
            }
        } else if (*decode_cmd) {
            std::string text = slurp(path_file);
            int most = largest_handle(text);
            std::optional<PrimitiveCatalog> cat;
            if (most > 0)
                cat = generate_catalog(most);
            std::cout << to_text(phi(parse_decorated(text, cat ? &*cat : nullptr)));
        } else if (*paths_cmd) {
            auto cat = generate_catalog(2 * n);
            if (count_only) {
                std::cout << count_decorated(n, cat) << "\n";
            } else {
                enumerate_decorated(n, cat, [&](const DecoratedPath& p) { std::cout << format_decorated(p, &cat) << "\n"; });
            }
        } else if (*prim_cmd) {
            if (max_vertices % 2 != 0)
                throw DomainError("--max-vertices must be even");
            if (max_vertices > 26)
                std::cerr << "warning: catalogues beyond 26 vertices take a long time\n";
            auto cat = generate_catalog(max_vertices);
            if (dir.empty()) {
                std::cout << cat.index_text();
            } else {
                fs::create_directories(dir);
                write_file(fs::path(dir) / "index.txt", cat.index_text());
                for (int v = 2; v <= max_vertices; v += 2)
                    if (!cat.entries(v).empty())
                        write_file(fs::path(dir) / ("size-" + std::to_string(v) + ".map"), cat.size_text(v));
            }
        } else if (*root_cmd) {
            std::cout << count_rootings(read_map(map_a)) << "\n";
        } else if (*asym_cmd) {
            std::cout << to_text(construct_asymmetric(n));
        } else if (*seq_cmd) {
            if (which == "f") {
                for (auto& v : f_sequence(n))
                    std::cout << v << "\n";
            } else if (method == "bell") {
                for (auto& v : g_sequence(n))
                    std::cout << v << "\n";
            } else {
                auto cat = generate_catalog(2 * n);
                for (int j = 1; j <= n; ++j)
                    std::cout << cat.rooting_sum(2 * j) << "\n";
            }
        } else if (*verify_cmd) {
            auto cat = generate_catalog(2 * n);
            std::set<Code> codes;
            long long paths = 0, path_trip = 0, map_trip = 0, invalid = 0;
            enumerate_decorated(n, cat, [&](const DecoratedPath& p) {
                ++paths;
                RootedMap m = phi(p);
                if (!validate(m).ok() || m.vertices() != 2 * n)
                    ++invalid;
                codes.insert(canonical_code(m));
                DecoratedPath q = phi_inverse(m, &cat);
                if (!(q == p))
                    ++path_trip;
                if (!rooted_isomorphic(phi(q), m))
                    ++map_trip;
            });
            const BigInt f = f_closed(n);
            bool ok = path_trip == 0 && map_trip == 0 && invalid == 0 && BigInt(paths) == f &&
                      BigInt(codes.size()) == f && cat.rooting_sum(2 * n) == BigInt(g_bell(n));
            nlohmann::ordered_json j;
            j["n"] = n;
            j["paths"] = paths;
            j["distinct_maps"] = codes.size();
            j["f"] = f.str();
            j["invalid_maps"] = invalid;
            j["path_round_trip_failures"] = path_trip;
            j["map_round_trip_failures"] = map_trip;
            j["catalog_rootings"] = cat.rooting_sum(2 * n);
            j["g"] = g_bell(n).str();
            j["ok"] = ok;
            std::cout << j.dump(2) << "\n";
            if (!ok)
                throw VerificationFailure("verification failed");
        } else if (*check_cmd) {
            std::vector<fs::path> files;
            if (fs::is_directory(dir)) {
                for (auto& e : fs::directory_iterator(dir))
                    if (e.is_regular_file())
                        files.push_back(e.path());
            } else {
                files.push_back(dir);
            }
            std::sort(files.begin(), files.end());
            int bad = 0;
            for (auto& f : files) {
                try {
                    if (f.extension() == ".map") {
                        auto ms = parse_maps(slurp(f.string()));
                        std::cout << f.filename().string() << ": " << ms.size() << " map(s) ok\n";
                    } else if (f.extension() == ".path") {
                        std::string text = slurp(f.string());
                        std::optional<PrimitiveCatalog> cat;
                        if (int most = largest_handle(text))
                            cat = generate_catalog(most);
                        auto p = parse_decorated(text, cat ? &*cat : nullptr);
                        std::cout << f.filename().string() << ": path of semilength " << p.path.semilength() << " ok\n";
                    }
                } catch (const DomainError& e) {
                    ++bad;
                    std::cerr << f.filename().string() << ": " << e.what() << "\n";
                }
            }
            if (bad)
                throw VerificationFailure(std::to_string(bad) + " file(s) failed");
        }
    } catch (const VerificationFailure& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
