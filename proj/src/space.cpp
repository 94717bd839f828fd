#include "fintop/space.hpp"

#include <algorithm>
#include <cassert>

#include "fintop/errors.hpp"

namespace fintop {

namespace {

void check_set_range(const FiniteSpace& space, Mask s) {
    if (s & ~space.full())
        throw Error(Errc::index_out_of_range,
                    "set " + set_to_string(s) + " is not contained in a carrier of size " +
                        std::to_string(space.n),
                    s);
}

void check_point_range(const FiniteSpace& space, int x) {
    if (x < 0 || x >= space.n)
        throw Error(Errc::index_out_of_range,
                    "point " + std::to_string(x) + " is not in a carrier of size " +
                        std::to_string(space.n));
}

}  // namespace

bool FiniteSpace::has_open(Mask m) const {
    return std::binary_search(opens.begin(), opens.end(), m);
}

FiniteSpace validate_topology(int n, std::vector<Mask> family) {
    if (n < 0) throw Error(Errc::invalid_parameter, "point count must be nonnegative");
    if (n > max_points)
        throw Error(Errc::too_many_points, "carrier size " + std::to_string(n) +
                                               " exceeds the supported maximum of " +
                                               std::to_string(max_points));
    const Mask full = full_mask(n);
    for (Mask m : family)
        if (m & ~full)
            throw Error(Errc::index_out_of_range,
                        "open set " + set_to_string(m) + " is not contained in a carrier of size " +
                            std::to_string(n),
                        m);
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    auto has = [&](Mask m) { return std::binary_search(family.begin(), family.end(), m); };
    if (!has(0)) throw Error(Errc::missing_empty, "the empty set is missing from the family");
    if (!has(full))
        throw Error(Errc::missing_full,
                    "the full set " + set_to_string(full) + " is missing from the family", full);

    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            const Mask u = family[i] | family[j];
            if (!has(u))
                throw Error(Errc::not_closed_under_union,
                            "union of " + set_to_string(family[i]) + " and " +
                                set_to_string(family[j]) + " is missing",
                            family[i], family[j]);
            const Mask w = family[i] & family[j];
            if (!has(w))
                throw Error(Errc::not_closed_under_intersection,
                            "intersection of " + set_to_string(family[i]) + " and " +
                                set_to_string(family[j]) + " is missing",
                            family[i], family[j]);
        }
    return FiniteSpace{n, std::move(family)};
}

Mask closure(const FiniteSpace& space, Mask s) {
    check_set_range(space, s);
    // Intersection of all closed supersets: drop every open avoiding s.
    Mask acc = space.full();
    for (Mask o : space.opens)
        if ((o & s) == 0) acc &= ~o;
    return acc;
}

Mask interior(const FiniteSpace& space, Mask s) {
    check_set_range(space, s);
    Mask acc = 0;
    for (Mask o : space.opens)
        if (subset_of(o, s)) acc |= o;
    return acc;
}

bool is_dense(const FiniteSpace& space, Mask s) { return closure(space, s) == space.full(); }

bool is_hausdorff(const FiniteSpace& space) {
    bool separated = true;
    for (int x = 0; x < space.n && separated; ++x)
        for (int y = x + 1; y < space.n; ++y)
            if (!separation_witness(space, x, y)) {
                separated = false;
                break;
            }
    // A finite space is Hausdorff exactly when it is discrete.
    assert(separated == (space.opens.size() == (size_t{1} << space.n)));
    return separated;
}

std::optional<SeparationWitness> separation_witness(const FiniteSpace& space, int x, int y) {
    check_point_range(space, x);
    check_point_range(space, y);
    if (x == y)
        throw Error(Errc::same_point, "points must be distinct, both are " + std::to_string(x));
    for (Mask o1 : space.opens) {
        if (!has_point(o1, x)) continue;
        for (Mask o2 : space.opens)
            if (has_point(o2, y) && (o1 & o2) == 0) return SeparationWitness{o1, o2};
    }
    return std::nullopt;
}

SeparationAxioms separation_axioms(const FiniteSpace& space) {
    SeparationAxioms out;
    out.t0 = true;
    for (int x = 0; x < space.n && out.t0; ++x)
        for (int y = x + 1; y < space.n; ++y) {
            bool distinguishable = false;
            for (Mask o : space.opens)
                if (has_point(o, x) != has_point(o, y)) {
                    distinguishable = true;
                    break;
                }
            if (!distinguishable) {
                out.t0 = false;
                break;
            }
        }
    out.t1 = true;
    for (int x = 0; x < space.n; ++x)
        if (closure(space, point_bit(x)) != point_bit(x)) {
            out.t1 = false;
            break;
        }
    out.t2 = is_hausdorff(space);
    return out;
}

Preorder specialization_preorder(const FiniteSpace& space) {
    Preorder p{space.n, std::vector<Mask>(space.n, 0)};
    for (int y = 0; y < space.n; ++y) {
        const Mask below = closure(space, point_bit(y));  // { x : x <= y }
        for (int x : set_points(below)) p.above[x] |= point_bit(y);
    }
#ifndef NDEBUG
    for (int x = 0; x < p.n; ++x) {
        assert(p.leq(x, x));
        for (int y : set_points(p.above[x])) assert(subset_of(p.above[y], p.above[x]));
    }
#endif
    return p;
}

Partition connected_components(const FiniteSpace& space) {
    const Preorder p = specialization_preorder(space);
    std::vector<Mask> adjacency(space.n, 0);
    for (int x = 0; x < space.n; ++x) {
        adjacency[x] |= p.above[x];
        for (int y : set_points(p.above[x])) adjacency[y] |= point_bit(x);
    }
    std::vector<int> label(space.n, -1);
    int next = 0;
    for (int start = 0; start < space.n; ++start) {
        if (label[start] >= 0) continue;
        std::vector<int> stack{start};
        label[start] = next;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : set_points(adjacency[v]))
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return Partition::from_labels(space.n, label);
}

}  // namespace fintop
