#include "bicubic/map.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace bicubic {

std::string ValidationReport::describe() const {
    std::ostringstream out;
    out << "permutation=" << permutation << " involution=" << involution << " connected=" << connected
        << " genus0=" << genus_zero << " cubic=" << cubic << " bipartite=" << bipartite << " V=" << vertices
        << " E=" << edges << " F=" << faces;
    return out.str();
}

RootedMap::RootedMap(std::vector<int> sigma, int root) : sigma_(std::move(sigma)), root_(root) {
    const int n = darts();
    if (n == 0 || n % 2 != 0)
        throw DomainError("map needs a positive even number of darts");
    if (root < 0 || root >= n)
        throw DomainError("root dart out of range");
    sinv_.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        int s = sigma_[d];
        if (s < 0 || s >= n || sinv_[s] != -1)
            throw DomainError("sigma is not a permutation");
        sinv_[s] = d;
    }
    vert_.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        if (vert_[d] != -1)
            continue;
        for (int x = d; vert_[x] == -1; x = sigma_[x])
            vert_[x] = nverts_;
        ++nverts_;
    }

    // Colour by BFS from the root vertex.
    std::vector<int> col(nverts_, -1);
    std::vector<std::vector<int>> at(nverts_);
    for (int d = 0; d < n; ++d)
        at[vert_[d]].push_back(d);
    bip_ = true;
    std::deque<int> q{vert_[root_]};
    col[vert_[root_]] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int d : at[v]) {
            int w = vert_[d ^ 1];
            if (col[w] == -1) {
                col[w] = 1 - col[v];
                q.push_back(w);
            } else if (col[w] == col[v]) {
                bip_ = false;
            }
        }
    }
    if (bip_) {
        dark_.resize(nverts_);
        for (int v = 0; v < nverts_; ++v)
            dark_[v] = col[v] == 1;
    }
}

RootedMap RootedMap::from_permutations(const std::vector<int>& sigma, const std::vector<int>& alpha, int root,
                                       std::vector<int>* old_to_new) {
    const int n = static_cast<int>(sigma.size());
    if (static_cast<int>(alpha.size()) != n)
        throw DomainError("sigma and alpha sizes differ");
    std::vector<int> ren(n, -1);
    int next = 0;
    for (int d = 0; d < n; ++d) {
        if (ren[d] != -1)
            continue;
        int e = alpha[d];
        if (e < 0 || e >= n || e == d || alpha[e] != d || ren[e] != -1)
            throw DomainError("alpha is not a fixed-point-free involution");
        ren[d] = next++;
        ren[e] = next++;
    }
    std::vector<int> s(n);
    for (int d = 0; d < n; ++d)
        s[ren[d]] = ren[sigma[d]];
    if (old_to_new)
        *old_to_new = ren;
    return RootedMap(std::move(s), ren.at(root));
}

std::vector<std::vector<int>> RootedMap::vertex_cycles() const {
    std::vector<std::vector<int>> out(nverts_);
    for (int d = 0; d < darts(); ++d) {
        auto& c = out[vert_[d]];
        if (c.empty())
            for (int x = d;; x = sigma_[x]) {
                c.push_back(x);
                if (sigma_[x] == d)
                    break;
            }
    }
    return out;
}

std::vector<std::vector<int>> RootedMap::faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(darts(), 0);
    auto trace = [&](int d) {
        std::vector<int> f;
        for (int x = d; !seen[x]; x = face_next(x)) {
            seen[x] = 1;
            f.push_back(x);
        }
        out.push_back(std::move(f));
    };
    trace(root_);
    for (int d = 0; d < darts(); ++d)
        if (!seen[d])
            trace(d);
    return out;
}

std::vector<int> RootedMap::face_of() const {
    std::vector<int> fo(darts());
    auto fs = faces();
    for (int i = 0; i < static_cast<int>(fs.size()); ++i)
        for (int d : fs[i])
            fo[d] = i;
    return fo;
}

std::vector<char> RootedMap::dark_vertices() const { return bip_ ? dark_ : std::vector<char>{}; }

bool RootedMap::dark(int d) const {
    if (!bip_)
        throw DomainError("map is not bipartite");
    return dark_[vert_[d]];
}

RootedMap RootedMap::reroot(int d) const {
    if (d < 0 || d >= darts())
        throw DomainError("dart out of range");
    return RootedMap(sigma_, d);
}

ValidationReport validate(const std::vector<int>& sigma, const std::vector<int>& alpha) {
    ValidationReport r;
    const int n = static_cast<int>(sigma.size());
    r.edges = n / 2;
    if (n == 0 || static_cast<int>(alpha.size()) != n)
        return r;

    std::vector<char> hit(n, 0);
    r.permutation = true;
    for (int s : sigma) {
        if (s < 0 || s >= n || hit[s])
            r.permutation = false;
        else
            hit[s] = 1;
    }
    r.involution = n % 2 == 0;
    for (int d = 0; d < n; ++d)
        if (alpha[d] < 0 || alpha[d] >= n || alpha[d] == d || alpha[alpha[d]] != d)
            r.involution = false;
    if (!r.permutation || !r.involution)
        return r;

    std::vector<int> vert(n, -1), face(n, -1);
    r.cubic = true;
    for (int d = 0; d < n; ++d) {
        if (vert[d] != -1)
            continue;
        int len = 0;
        for (int x = d; vert[x] == -1; x = sigma[x], ++len)
            vert[x] = r.vertices;
        ++r.vertices;
        if (len != 3)
            r.cubic = false;
    }
    for (int d = 0; d < n; ++d) {
        if (face[d] != -1)
            continue;
        for (int x = d; face[x] == -1; x = sigma[alpha[x]])
            face[x] = r.faces;
        ++r.faces;
    }

    // Transitivity of <sigma, alpha> on darts.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int x : {sigma[d], alpha[d]})
            if (!seen[x]) {
                seen[x] = 1;
                ++reached;
                stack.push_back(x);
            }
    }
    r.connected = reached == n;
    r.genus_zero = r.connected && r.vertices - r.edges + r.faces == 2;

    std::vector<std::vector<int>> at(r.vertices);
    for (int d = 0; d < n; ++d)
        at[vert[d]].push_back(d);
    std::vector<int> col(r.vertices, -1);
    r.bipartite = true;
    for (int start = 0; start < r.vertices; ++start) {
        if (col[start] != -1)
            continue;
        col[start] = 0;
        std::vector<int> todo{start};
        while (!todo.empty()) {
            int v = todo.back();
            todo.pop_back();
            for (int d : at[v]) {
                int w = vert[alpha[d]];
                if (col[w] == -1) {
                    col[w] = 1 - col[v];
                    todo.push_back(w);
                } else if (col[w] == col[v]) {
                    r.bipartite = false;
                }
            }
        }
    }
    return r;
}

ValidationReport validate(const RootedMap& m) {
    std::vector<int> alpha(m.darts());
    for (int d = 0; d < m.darts(); ++d)
        alpha[d] = d ^ 1;
    return validate(m.sigma_table(), alpha);
}

RootedMap dual(const RootedMap& m) {
    std::vector<int> s(m.darts());
    for (int d = 0; d < m.darts(); ++d)
        s[d] = m.face_next(d);
    return RootedMap(std::move(s), m.root());
}

std::vector<char> cut_edges(const RootedMap& m) {
    // In a plane map, {e, f} is a minimal cut exactly when e and f separate the
    // same two faces; a bridge has one face on both sides.
    auto fo = m.face_of();
    std::map<std::pair<int, int>, int> count;
    for (int e = 0; e < m.edges(); ++e) {
        int a = fo[2 * e], b = fo[2 * e + 1];
        ++count[{std::min(a, b), std::max(a, b)}];
    }
    std::vector<char> out(m.edges(), 0);
    for (int e = 0; e < m.edges(); ++e) {
        int a = fo[2 * e], b = fo[2 * e + 1];
        out[e] = a == b || count[{std::min(a, b), std::max(a, b)}] > 1;
    }
    return out;
}

bool is_primitive(const RootedMap& m) {
    auto c = cut_edges(m);
    return std::none_of(c.begin(), c.end(), [](char x) { return x; });
}

namespace {

// Darts in breadth-first order from the root, following sigma then alpha.
std::vector<int> bfs_order(const RootedMap& m) {
    std::vector<int> order;
    order.reserve(m.darts());
    std::vector<char> seen(m.darts(), 0);
    order.push_back(m.root());
    seen[m.root()] = 1;
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int x : {m.sigma(d), d ^ 1})
            if (!seen[x]) {
                seen[x] = 1;
                order.push_back(x);
            }
    }
    return order;
}

} // namespace

Code canonical_code(const RootedMap& m) {
    auto order = bfs_order(m);
    const int n = m.darts();
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i)
        rank[order[i]] = i;
    Code c;
    c.reserve(1 + 2 * n);
    c.push_back(n);
    for (int i = 0; i < n; ++i)
        c.push_back(rank[m.sigma(order[i])] + 1);
    for (int i = 0; i < n; ++i)
        c.push_back(rank[order[i] ^ 1] + 1);
    return c;
}

RootedMap map_from_code(const Code& code) {
    if (code.empty() || code[0] <= 0 || static_cast<int>(code.size()) != 1 + 2 * code[0])
        throw DomainError("malformed canonical code");
    const int n = code[0];
    std::vector<int> s(n), a(n);
    for (int i = 0; i < n; ++i) {
        s[i] = code[1 + i] - 1;
        a[i] = code[1 + n + i] - 1;
        if (s[i] < 0 || s[i] >= n || a[i] < 0 || a[i] >= n)
            throw DomainError("canonical code entry out of range");
    }
    return RootedMap::from_permutations(s, a, 0);
}

std::vector<Code> rooted_codes(const RootedMap& m) {
    std::vector<Code> all;
    all.reserve(m.darts());
    for (int d = 0; d < m.darts(); ++d)
        all.push_back(canonical_code(m.reroot(d)));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

Code unrooted_code(const RootedMap& m) {
    Code best;
    for (int d = 0; d < m.darts(); ++d) {
        Code c = canonical_code(m.reroot(d));
        if (best.empty() || c < best)
            best = std::move(c);
    }
    return best;
}

int count_rootings(const RootedMap& m) { return static_cast<int>(rooted_codes(m).size()); }

std::optional<std::vector<int>> rooted_isomorphism(const RootedMap& a, const RootedMap& b) {
    if (a.darts() != b.darts() || canonical_code(a) != canonical_code(b))
        return std::nullopt;
    auto oa = bfs_order(a), ob = bfs_order(b);
    std::vector<int> iso(a.darts());
    for (int i = 0; i < a.darts(); ++i)
        iso[oa[i]] = ob[i];
    return iso;
}

bool rooted_isomorphic(const RootedMap& a, const RootedMap& b) {
    return a.darts() == b.darts() && canonical_code(a) == canonical_code(b);
}

std::string to_text(const RootedMap& m) {
    std::ostringstream out;
    out << "bicubicmap 1\n";
    out << "darts " << m.darts() << "\n";
    out << "root " << m.root() + 1 << "\n";
    for (auto& cyc : m.vertex_cycles()) {
        out << "vertex";
        for (int d : cyc)
            out << ' ' << d + 1;
        out << "\n";
    }
    return out.str();
}

namespace {

struct MapParser {
    std::vector<std::string> lines;
    size_t pos = 0;
    size_t last = 0;

    [[noreturn]] void fail(size_t line, const std::string& msg) const {
        throw DomainError("line " + std::to_string(line) + ": " + msg);
    }

    // Next non-blank, non-comment line; returns false at end of input.
    bool next(std::istringstream& ls, size_t& lineno) {
        while (pos < lines.size()) {
            std::string s = lines[pos++];
            if (auto h = s.find('#'); h != std::string::npos)
                s.erase(h);
            if (s.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            ls.clear();
            ls.str(s);
            lineno = pos;
            return true;
        }
        return false;
    }

    bool more() {
        size_t save = pos;
        std::istringstream ls;
        size_t ln;
        bool r = next(ls, ln);
        pos = save;
        return r;
    }

    int expect_int_field(const std::string& key) {
        std::istringstream ls;
        size_t ln = lines.size();
        if (!next(ls, ln))
            fail(ln, "expected '" + key + "'");
        std::string k;
        long v;
        ls >> k;
        if (k != key)
            fail(ln, "expected '" + key + "', found '" + k + "'");
        last = ln;
        if (!(ls >> v))
            fail(ln, "missing integer after '" + key + "'");
        std::string extra;
        if (ls >> extra)
            fail(ln, "trailing text '" + extra + "'");
        return static_cast<int>(v);
    }

    RootedMap one() {
        std::istringstream ls;
        size_t start = lines.size();
        if (!next(ls, start))
            fail(start, "empty input");
        std::string magic;
        int version = 0;
        ls >> magic >> version;
        if (magic != "bicubicmap" || version != 1)
            fail(start, "expected header 'bicubicmap 1'");
        int n = expect_int_field("darts");
        if (n <= 0 || n % 2 != 0)
            fail(last, "dart count must be positive and even");
        int root = expect_int_field("root");
        if (root < 1 || root > n)
            fail(last, "root dart out of range");

        std::vector<int> sigma(n, -1);
        std::vector<size_t> where(n, 0);
        int covered = 0;
        while (covered < n) {
            size_t ln = lines.size();
            if (!next(ls, ln))
                fail(ln, "missing vertex lines: " + std::to_string(n - covered) + " darts unplaced");
            std::string k;
            ls >> k;
            if (k != "vertex")
                fail(ln, "expected 'vertex', found '" + k + "'");
            std::vector<int> cyc;
            long d;
            while (ls >> d) {
                if (d < 1 || d > n)
                    fail(ln, "dart " + std::to_string(d) + " out of range");
                if (where[d - 1])
                    fail(ln, "dart " + std::to_string(d) + " already placed on line " +
                                 std::to_string(where[d - 1]));
                where[d - 1] = ln;
                cyc.push_back(static_cast<int>(d - 1));
            }
            if (!ls.eof())
                fail(ln, "non-integer dart");
            if (cyc.size() != 3)
                fail(ln, "vertex has degree " + std::to_string(cyc.size()) + ", expected 3");
            for (size_t i = 0; i < cyc.size(); ++i)
                sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
            covered += static_cast<int>(cyc.size());
        }
        RootedMap m(sigma, root - 1);
        auto rep = validate(m);
        if (!rep.ok())
            fail(start, "invalid bicubic map (" + rep.describe() + ")");
        return m;
    }
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        out.push_back(line);
    return out;
}

} // namespace

RootedMap parse_map(const std::string& text) {
    MapParser p{split_lines(text)};
    RootedMap m = p.one();
    if (p.more())
        p.fail(p.pos + 1, "unexpected content after map");
    return m;
}

std::vector<RootedMap> parse_maps(const std::string& text) {
    MapParser p{split_lines(text)};
    std::vector<RootedMap> out;
    while (p.more())
        out.push_back(p.one());
    return out;
}

std::string code_to_string(const Code& c) {
    std::ostringstream out;
    for (size_t i = 0; i < c.size(); ++i)
        out << (i ? " " : "") << c[i];
    return out.str();
}

Code code_from_string(const std::string& s) {
    std::istringstream in(s);
    Code c;
    long v;
    while (in >> v)
        c.push_back(static_cast<int>(v));
    if (!in.eof())
        throw DomainError("canonical code must be integers");
    return c;
}

} // namespace bicubic
