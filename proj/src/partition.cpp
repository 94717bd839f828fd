#include "fintop/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "fintop/errors.hpp"

namespace fintop {

Partition Partition::from_blocks(int n, std::vector<Mask> blocks) {
    if (n < 0 || n > max_points)
        throw Error(Errc::invalid_parameter, "carrier size " + std::to_string(n) + " out of range");
    const Mask full = full_mask(n);
    Mask seen = 0;
    for (Mask b : blocks) {
        if (b == 0) throw Error(Errc::invalid_parameter, "partition block is empty");
        if (b & ~full)
            throw Error(Errc::invalid_parameter,
                        "block " + set_to_string(b) + " is not contained in a carrier of size " +
                            std::to_string(n),
                        b);
        if (b & seen)
            throw Error(Errc::invalid_parameter, "block " + set_to_string(b) + " overlaps another",
                        b);
        seen |= b;
    }
    if (seen != full)
        throw Error(Errc::invalid_parameter,
                    "blocks cover " + set_to_string(seen) + " instead of the full carrier", seen);
    std::sort(blocks.begin(), blocks.end(),
              [](Mask a, Mask b) { return first_point(a) < first_point(b); });
    Partition p{n, std::move(blocks), std::vector<int>(n, -1)};
    for (int i = 0; i < p.size(); ++i)
        for (int x : set_points(p.blocks[i])) p.block_of[x] = i;
    return p;
}

Partition Partition::from_labels(int n, std::span<const int> labels) {
    if (static_cast<int>(labels.size()) != n)
        throw Error(Errc::invalid_parameter, "label count does not match carrier size");
    std::unordered_map<int, int> index;  // label -> block, in first-occurrence order
    std::vector<Mask> blocks;
    for (int x = 0; x < n; ++x) {
        auto [it, fresh] = index.try_emplace(labels[x], static_cast<int>(blocks.size()));
        if (fresh) blocks.push_back(0);
        blocks[it->second] |= point_bit(x);
    }
    return from_blocks(n, std::move(blocks));
}

Partition Partition::singletons(int n) {
    std::vector<Mask> blocks;
    blocks.reserve(n);
    for (int x = 0; x < n; ++x) blocks.push_back(point_bit(x));
    return from_blocks(n, std::move(blocks));
}

Partition Partition::single_block(int n) {
    if (n < 1) throw Error(Errc::invalid_parameter, "single block needs a nonempty carrier");
    return from_blocks(n, {full_mask(n)});
}

}  // namespace fintop
