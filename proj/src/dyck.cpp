#include "bicubic/dyck.hpp"

#include "bicubic/primitives.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace bicubic {

DyckPath::DyckPath(std::vector<bool> steps) : steps_(std::move(steps)) {
    int h = 0;
    for (bool up : steps_) {
        h += up ? 1 : -1;
        if (h < 0)
            throw DomainError("Dyck word goes below the axis");
    }
    if (h != 0)
        throw DomainError("Dyck word does not return to the axis");
}

DyckPath DyckPath::parse(const std::string& word) {
    std::vector<bool> s;
    for (size_t i = 0; i < word.size();) {
        char c = word[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c != 'U' && c != 'D' && c != 'u' && c != 'd')
            throw DomainError(std::string("unexpected character '") + c + "' in Dyck word");
        bool up = c == 'U' || c == 'u';
        ++i;
        size_t j = i;
        while (j < word.size() && std::isdigit(static_cast<unsigned char>(word[j])))
            ++j;
        long reps = j > i ? std::stol(word.substr(i, j - i)) : 1;
        if (reps <= 0)
            throw DomainError("zero exponent in Dyck word");
        s.insert(s.end(), reps, up);
        i = j;
    }
    return DyckPath(std::move(s));
}

std::string DyckPath::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < steps_.size();) {
        size_t j = i;
        while (j < steps_.size() && steps_[j] == steps_[i])
            ++j;
        out << (steps_[i] ? 'U' : 'D');
        if (j - i > 1)
            out << j - i;
        i = j;
    }
    return out.str();
}

std::string DyckPath::letters() const {
    std::string s;
    for (bool up : steps_)
        s += up ? 'U' : 'D';
    return s;
}

std::vector<Ascent> ascents(const DyckPath& p) {
    std::vector<Ascent> out;
    const auto& s = p.steps();
    for (int i = 0; i < p.length();) {
        if (!s[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j < p.length() && s[j])
            ++j;
        out.push_back({i, j - i});
        i = j;
    }
    return out;
}

std::vector<int> matching(const DyckPath& p) {
    std::vector<int> match(p.length(), -1), stack;
    for (int i = 0; i < p.length(); ++i) {
        if (p.steps()[i]) {
            stack.push_back(i);
        } else {
            match[i] = stack.back();
            match[stack.back()] = i;
            stack.pop_back();
        }
    }
    return match;
}

std::vector<int> label_up_steps(const DyckPath& p) {
    std::vector<int> lab(p.length(), 0);
    int used = 0;
    for (auto a : ascents(p)) {
        for (int k = 0; k < a.length; ++k)
            lab[a.start + k] = used + a.length - k;
        used += a.length;
    }
    return lab;
}

int up_step_with_label(const DyckPath& p, int label) {
    auto lab = label_up_steps(p);
    for (int i = 0; i < p.length(); ++i)
        if (lab[i] == label)
            return i;
    throw DomainError("no up-step labelled " + std::to_string(label));
}

std::vector<int> merge_targets(const DyckPath& p) {
    auto as = ascents(p);
    auto lab = label_up_steps(p);
    auto match = matching(p);
    std::vector<int> out;
    for (size_t i = 0; i + 1 < as.size(); ++i) {
        // The descent after this peak ends right before the next ascent.
        int last_down = as[i + 1].start - 1;
        out.push_back(lab[match[last_down]]);
    }
    return out;
}

int compose_position(const DyckPath& p1, int a) {
    int u = up_step_with_label(p1, a);
    return matching(p1)[u] + 1;
}

DyckPath compose(const DyckPath& p1, int a, const DyckPath& p2) {
    int at = compose_position(p1, a);
    std::vector<bool> s(p1.steps().begin(), p1.steps().begin() + at);
    s.insert(s.end(), p2.steps().begin(), p2.steps().end());
    s.insert(s.end(), p1.steps().begin() + at, p1.steps().end());
    return DyckPath(std::move(s));
}

bool DecoratedPath::operator==(const DecoratedPath& o) const {
    if (!(path == o.path) || decorations.size() != o.decorations.size())
        return false;
    for (size_t i = 0; i < decorations.size(); ++i)
        if (!rooted_isomorphic(decorations[i], o.decorations[i]))
            return false;
    return true;
}

void check_decorated(const DecoratedPath& p) {
    auto as = ascents(p.path);
    if (as.size() != p.decorations.size())
        throw DomainError("decorated path has " + std::to_string(as.size()) + " ascents but " +
                          std::to_string(p.decorations.size()) + " decorations");
    for (size_t i = 0; i < as.size(); ++i) {
        if (as[i].length % 3 != 0)
            throw DomainError("ascent " + std::to_string(i) + " has length not divisible by 3");
        const auto& b = p.decorations[i];
        if (b.edges() != as[i].length)
            throw DomainError("decoration " + std::to_string(i) + " has " + std::to_string(b.edges()) +
                              " edges, ascent has length " + std::to_string(as[i].length));
        if (!validate(b).ok() || !is_primitive(b))
            throw DomainError("decoration " + std::to_string(i) + " is not a primitive bicubic map");
    }
}

namespace {

struct Enumerator {
    int total_ups;
    const PrimitiveCatalog& cat;
    const std::function<void(const DecoratedPath&)>& visit;
    std::vector<bool> steps;
    std::vector<int> blocks;   // ascent lengths divided by 3
    long long produced = 0;

    void emit_decorations() {
        DyckPath path(steps);
        std::vector<const std::vector<RootedMap>*> pools;
        for (int j : blocks)
            pools.push_back(&cat.rooted(2 * j));
        std::vector<size_t> idx(blocks.size(), 0);
        while (true) {
            DecoratedPath dp{path, {}};
            dp.decorations.reserve(blocks.size());
            for (size_t i = 0; i < blocks.size(); ++i)
                dp.decorations.push_back((*pools[i])[idx[i]]);
            visit(dp);
            ++produced;
            int k = static_cast<int>(blocks.size()) - 1;
            while (k >= 0 && ++idx[k] == pools[k]->size())
                idx[k--] = 0;
            if (k < 0)
                break;
        }
    }

    // ups counts ascent units of 3 already placed.
    void ascend(int ups, int height) {
        for (int j = 1; 3 * (ups + j) <= total_ups; ++j) {
            if (cat.rooted(2 * j).empty())
                continue;
            int u2 = ups + j;
            int h = height + 3 * j;
            steps.insert(steps.end(), 3 * j, true);
            blocks.push_back(j);
            int lo = 3 * u2 == total_ups ? h : 1;
            for (int t = lo; t <= h; ++t) {
                steps.insert(steps.end(), t, false);
                if (3 * u2 == total_ups)
                    emit_decorations();
                else
                    ascend(u2, h - t);
                steps.resize(steps.size() - t);
            }
            blocks.pop_back();
            steps.resize(steps.size() - 3 * j);
        }
    }
};

} // namespace

long long enumerate_decorated(int n, const PrimitiveCatalog& catalog,
                              const std::function<void(const DecoratedPath&)>& visit) {
    if (n < 1)
        throw DomainError("semilength must be positive");
    if (catalog.max_vertices() < 2 * n)
        throw DomainError("catalog covers " + std::to_string(catalog.max_vertices()) + " vertices, need " +
                          std::to_string(2 * n));
    Enumerator en{3 * n, catalog, visit, {}, {}};
    en.ascend(0, 0);
    return en.produced;
}

long long count_decorated(int n, const PrimitiveCatalog& catalog) {
    if (catalog.max_vertices() < 2 * n)
        throw DomainError("catalog too small");
    // ways[u][h]: completions with u ascent units used and height h, at the
    // start of an ascent.
    std::map<std::pair<int, int>, long long> memo;
    std::function<long long(int, int)> go = [&](int u, int h) -> long long {
        if (u == n)
            return h == 0 ? 1 : 0;
        auto key = std::make_pair(u, h);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        long long total = 0;
        for (int j = 1; u + j <= n; ++j) {
            long long g = static_cast<long long>(catalog.rooted(2 * j).size());
            if (g == 0)
                continue;
            int top = h + 3 * j;
            if (u + j == n) {
                total += g;
                continue;
            }
            for (int t = 1; t <= top; ++t)
                total += g * go(u + j, top - t);
        }
        return memo[key] = total;
    };
    return go(0, 0);
}

} // namespace bicubic
