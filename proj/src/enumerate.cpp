#include "fintop/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

#include "fintop/errors.hpp"
#include "fintop/maps.hpp"

namespace fintop {

namespace {

// Order families as the integers whose bit m says "mask m is open": compare
// from the largest member down, a missing member losing to a present one.
bool family_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    size_t i = a.size(), j = b.size();
    while (i > 0 && j > 0) {
        if (a[i - 1] != b[j - 1]) return a[i - 1] < b[j - 1];
        --i;
        --j;
    }
    return i == 0 && j > 0;
}

void check_enumeration_size(int n) {
    if (n < 0) throw Error(Errc::invalid_parameter, "point count must be nonnegative");
    if (n > enumerate_hard_limit)
        throw Error(Errc::limit_exceeded, "enumeration supports at most " +
                                              std::to_string(enumerate_hard_limit) + " points");
}

}  // namespace

std::vector<FiniteSpace> enumerate_topologies_by_scan(int n) {
    check_enumeration_size(n);
    if (n > 4)
        throw Error(Errc::limit_exceeded, "family scan is limited to 4 points");
    const int subset_count = 1 << n;
    std::vector<FiniteSpace> out;
    std::vector<Mask> members;
    for (std::uint32_t family = 0; family < (std::uint64_t{1} << subset_count); ++family) {
        if (!(family & 1u) || !(family >> (subset_count - 1) & 1u)) continue;  // needs {} and full
        members.clear();
        for (int m = 0; m < subset_count; ++m)
            if (family >> m & 1u) members.push_back(static_cast<Mask>(m));
        bool closed = true;
        for (size_t i = 0; i < members.size() && closed; ++i)
            for (size_t j = i + 1; j < members.size(); ++j) {
                if (!(family >> (members[i] | members[j]) & 1u) ||
                    !(family >> (members[i] & members[j]) & 1u)) {
                    closed = false;
                    break;
                }
            }
        if (closed) out.push_back(FiniteSpace{n, members});
    }
    return out;
}

std::vector<FiniteSpace> enumerate_topologies_by_preorders(int n) {
    check_enumeration_size(n);
    const int offdiag = n * (n - 1);
    std::vector<FiniteSpace> out;
    std::vector<Mask> above(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << offdiag); ++bits) {
        std::uint64_t rest = bits;
        for (int x = 0; x < n; ++x) {
            above[x] = point_bit(x);
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                if (rest & 1u) above[x] |= point_bit(y);
                rest >>= 1;
            }
        }
        bool transitive = true;
        for (int x = 0; x < n && transitive; ++x)
            for (int y : set_points(above[x]))
                if (!subset_of(above[y], above[x])) {
                    transitive = false;
                    break;
                }
        if (!transitive) continue;
        std::vector<Mask> upsets;
        for (Mask u = 0; u < (Mask{1} << n); ++u) {
            bool upset = true;
            for (int x : set_points(u))
                if (!subset_of(above[x], u)) {
                    upset = false;
                    break;
                }
            if (upset) upsets.push_back(u);
        }
        out.push_back(FiniteSpace{n, std::move(upsets)});
    }
    std::sort(out.begin(), out.end(),
              [](const FiniteSpace& a, const FiniteSpace& b) { return family_less(a.opens, b.opens); });
#ifndef NDEBUG
    for (size_t i = 1; i < out.size(); ++i) assert(out[i - 1].opens != out[i].opens);
#endif
    return out;
}

std::vector<FiniteSpace> enumerate_topologies(int n, bool up_to_homeo) {
    check_enumeration_size(n);
    std::vector<FiniteSpace> all =
        n <= 4 ? enumerate_topologies_by_scan(n) : enumerate_topologies_by_preorders(n);
    if (!up_to_homeo) return all;
    std::vector<FiniteSpace> representatives;
    for (FiniteSpace& space : all) {
        bool seen = false;
        for (const FiniteSpace& rep : representatives)
            if (are_homeomorphic(rep, space)) {
                seen = true;
                break;
            }
        if (!seen) representatives.push_back(std::move(space));
    }
    return representatives;
}

}  // namespace fintop
