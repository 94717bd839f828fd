#include "fintop/maps.hpp"

#include <algorithm>
#include <cassert>

#include "fintop/errors.hpp"

namespace fintop {

namespace {

Mask preimage(std::span<const int> assignment, Mask target) {
    Mask pre = 0;
    for (size_t p = 0; p < assignment.size(); ++p)
        if (has_point(target, assignment[p])) pre |= point_bit(static_cast<int>(p));
    return pre;
}

std::vector<int> membership_counts(const FiniteSpace& space) {
    std::vector<int> deg(space.n, 0);
    for (Mask o : space.opens)
        for (int p : set_points(o)) ++deg[p];
    return deg;
}

bool relabeled_family_equals(const FiniteSpace& a, const FiniteSpace& b,
                             const std::vector<int>& perm) {
    std::vector<Mask> mapped;
    mapped.reserve(a.opens.size());
    for (Mask o : a.opens) {
        Mask m = 0;
        for (int p : set_points(o)) m |= point_bit(perm[p]);
        mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.opens;
}

bool extend_bijection(const FiniteSpace& a, const FiniteSpace& b, const std::vector<int>& deg_a,
                      const std::vector<int>& deg_b, std::vector<int>& perm, Mask& used, int pos) {
    if (pos == a.n) return relabeled_family_equals(a, b, perm);
    for (int y = 0; y < b.n; ++y) {
        if (has_point(used, y) || deg_a[pos] != deg_b[y]) continue;
        perm[pos] = y;
        used |= point_bit(y);
        if (extend_bijection(a, b, deg_a, deg_b, perm, used, pos + 1)) return true;
        used &= ~point_bit(y);
    }
    return false;
}

}  // namespace

std::optional<Mask> continuity_violation(const FiniteSpace& dom, const FiniteSpace& cod,
                                         std::span<const int> assignment) {
    for (Mask o : cod.opens)
        if (!dom.has_open(preimage(assignment, o))) return o;
    return std::nullopt;
}

ContinuousMap make_map(FiniteSpace dom, FiniteSpace cod, std::vector<int> assignment) {
    if (static_cast<int>(assignment.size()) != dom.n)
        throw Error(Errc::invalid_parameter,
                    "assignment has " + std::to_string(assignment.size()) + " entries for " +
                        std::to_string(dom.n) + " points");
    for (int v : assignment)
        if (v < 0 || v >= cod.n)
            throw Error(Errc::index_out_of_range,
                        "assignment value " + std::to_string(v) +
                            " is not in a codomain of size " + std::to_string(cod.n));
    if (auto bad = continuity_violation(dom, cod, assignment))
        throw Error(Errc::not_continuous,
                    "preimage of " + set_to_string(*bad) + " is not open", *bad);
    return ContinuousMap{std::move(dom), std::move(cod), std::move(assignment)};
}

ContinuousMap identity_map(const FiniteSpace& space) {
    std::vector<int> a(space.n);
    for (int i = 0; i < space.n; ++i) a[i] = i;
    return ContinuousMap{space, space, std::move(a)};
}

ContinuousMap constant_map(const FiniteSpace& dom, const FiniteSpace& cod, int value) {
    if (value < 0 || value >= cod.n)
        throw Error(Errc::index_out_of_range,
                    "constant value " + std::to_string(value) + " is not in a codomain of size " +
                        std::to_string(cod.n));
    return ContinuousMap{dom, cod, std::vector<int>(dom.n, value)};
}

ContinuousMap compose(const ContinuousMap& second, const ContinuousMap& first) {
    if (first.cod != second.dom)
        throw Error(Errc::codomain_mismatch,
                    "codomain of the first map differs from the domain of the second");
    std::vector<int> a(first.dom.n);
    for (int i = 0; i < first.dom.n; ++i) a[i] = second.assignment[first.assignment[i]];
    assert(!continuity_violation(first.dom, second.cod, a));
    return ContinuousMap{first.dom, second.cod, std::move(a)};
}

Mask image(const ContinuousMap& f) {
    Mask img = 0;
    for (int v : f.assignment) img |= point_bit(v);
    return img;
}

std::vector<ContinuousMap> enumerate_continuous_maps(const FiniteSpace& dom,
                                                     const FiniteSpace& cod) {
    std::vector<ContinuousMap> out;
    if (dom.n == 0) {
        out.push_back(ContinuousMap{dom, cod, {}});
        return out;
    }
    if (cod.n == 0) return out;
    std::vector<int> a(dom.n, 0);
    for (;;) {
        if (!continuity_violation(dom, cod, a)) out.push_back(ContinuousMap{dom, cod, a});
        int i = dom.n - 1;
        while (i >= 0 && a[i] == cod.n - 1) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

bool is_homeomorphism(const ContinuousMap& f) {
    if (f.dom.n != f.cod.n) return false;
    std::vector<int> inverse(f.cod.n, -1);
    for (int i = 0; i < f.dom.n; ++i) {
        if (inverse[f.assignment[i]] >= 0) return false;
        inverse[f.assignment[i]] = i;
    }
    return !continuity_violation(f.cod, f.dom, inverse);
}

std::optional<std::vector<int>> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.n != b.n || a.opens.size() != b.opens.size()) return std::nullopt;
    std::vector<int> sizes_a, sizes_b;
    for (Mask o : a.opens) sizes_a.push_back(set_size(o));
    for (Mask o : b.opens) sizes_b.push_back(set_size(o));
    std::sort(sizes_a.begin(), sizes_a.end());
    std::sort(sizes_b.begin(), sizes_b.end());
    if (sizes_a != sizes_b) return std::nullopt;

    const std::vector<int> deg_a = membership_counts(a);
    std::vector<int> deg_b = membership_counts(b);
    {
        std::vector<int> sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> perm(a.n, -1);
    Mask used = 0;
    if (extend_bijection(a, b, deg_a, deg_b, perm, used, 0)) return perm;
    return std::nullopt;
}

bool are_homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
    return find_homeomorphism(a, b).has_value();
}

}  // namespace fintop
