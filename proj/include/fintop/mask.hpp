#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace fintop {

// Subsets of the carrier {0..n-1} are n-bit masks, point i = bit i.
using Mask = std::uint32_t;

// Hard cap on carrier size. Keeps every exhaustive scan (2^n subsets,
// 2^blocks quotient candidates) within desk scale.
inline constexpr int max_points = 20;

constexpr Mask point_bit(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }

constexpr bool has_point(Mask m, int i) { return (m >> i) & 1u; }

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int set_size(Mask m) { return std::popcount(m); }

// Smallest member; m must be nonempty.
inline int first_point(Mask m) { return std::countr_zero(m); }

inline std::vector<int> set_points(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline std::string set_to_string(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int p : set_points(m)) {
        if (!first) out += ", ";
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

}  // namespace fintop
