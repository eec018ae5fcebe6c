#pragma once

#include "bicubic/map.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bicubic {

// Word over {U, D}; true is an up-step.
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::vector<bool> steps);
    // Accepts letters U/D with optional exponents ("U3D2U3D4"); blanks ignored.
    static DyckPath parse(const std::string& word);

    const std::vector<bool>& steps() const { return steps_; }
    int length() const { return static_cast<int>(steps_.size()); }
    int semilength() const { return length() / 2; }
    bool empty() const { return steps_.empty(); }
    bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }
    bool operator<(const DyckPath& o) const { return steps_ < o.steps_; }

    // Run-length form, e.g. "U3D2U3D4".
    std::string str() const;
    // Plain letters, e.g. "UUUDDUUUDDDD".
    std::string letters() const;

private:
    std::vector<bool> steps_;
};

struct Ascent {
    int start;    // position of its first U
    int length;
};

std::vector<Ascent> ascents(const DyckPath& p);
// match[i] = position of the step paired with step i.
std::vector<int> matching(const DyckPath& p);
// Label per position (0 on D-steps); within an ascent the top step gets the
// smallest label of the ascent's block.
std::vector<int> label_up_steps(const DyckPath& p);
// Position of the up-step with the given label.
int up_step_with_label(const DyckPath& p, int label);
// e_i for i = 1..k-1.
std::vector<int> merge_targets(const DyckPath& p);
// p2 spliced right after the D matching p1's up-step labelled a.
DyckPath compose(const DyckPath& p1, int a, const DyckPath& p2);
// Position in p1 where compose(p1, a, .) inserts.
int compose_position(const DyckPath& p1, int a);

struct DecoratedPath {
    DyckPath path;
    std::vector<RootedMap> decorations;   // one rooted primitive per ascent

    bool operator==(const DecoratedPath& o) const;
};

// Ascents are multiples of 3, decoration sizes match, decorations primitive.
void check_decorated(const DecoratedPath& p);

class PrimitiveCatalog;

// Every decorated path of semilength 3n, ascent compositions in lexicographic
// order and decorations in catalog order. Returns the number produced.
long long enumerate_decorated(int n, const PrimitiveCatalog& catalog,
                              const std::function<void(const DecoratedPath&)>& visit);

// Same count, without materialising paths.
long long count_decorated(int n, const PrimitiveCatalog& catalog);

} // namespace bicubic
