#pragma once

#include <span>
#include <vector>

#include "fintop/mask.hpp"

namespace fintop {

// Partition of {0..n-1}. Blocks are disjoint, nonempty, cover the carrier,
// and are ordered by their minimal element.
struct Partition {
    int n = 0;
    std::vector<Mask> blocks;
    std::vector<int> block_of;  // point -> block index

    static Partition from_blocks(int n, std::vector<Mask> blocks);
    static Partition from_labels(int n, std::span<const int> labels);
    static Partition singletons(int n);
    static Partition single_block(int n);  // n >= 1

    int size() const { return static_cast<int>(blocks.size()); }
    bool operator==(const Partition&) const = default;
};

}  // namespace fintop
