#pragma once

#include "bicubic/bijection.hpp"
#include "bicubic/primitives.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fixture {

inline std::string read_file(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    if (!in)
        throw std::runtime_error("missing fixture " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline bicubic::RootedMap load(const std::string& name) { return bicubic::parse_map(read_file(name)); }

inline const bicubic::PrimitiveCatalog& small_catalog() {
    static const bicubic::PrimitiveCatalog cat = bicubic::generate_catalog(18);
    return cat;
}

// Every rooted map on 2n vertices, via the decorated paths.
inline std::vector<bicubic::RootedMap> all_maps(int n) {
    std::vector<bicubic::RootedMap> out;
    bicubic::enumerate_maps(n, small_catalog(), [&](const bicubic::RootedMap& m) { out.push_back(m); });
    return out;
}

inline bicubic::DecoratedPath with_thetas(const std::string& word) {
    bicubic::DecoratedPath p{bicubic::DyckPath::parse(word), {}};
    for (size_t i = 0; i < bicubic::ascents(p.path).size(); ++i)
        p.decorations.push_back(bicubic::theta());
    return p;
}

} // namespace fixture
