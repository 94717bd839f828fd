#include "fintop/quotient.hpp"

#include <cassert>

#include "fintop/errors.hpp"
#include "fintop/generators.hpp"

namespace fintop {

namespace {

Partition clopen_partition(const FiniteSpace& space) {
    std::vector<Mask> clopens;
    for (Mask o : space.opens)
        if (space.has_open(space.full() & ~o)) clopens.push_back(o);
    std::vector<int> label(space.n, -1);
    for (int x = 0; x < space.n; ++x) {
        if (label[x] >= 0) continue;
        label[x] = x;
        for (int y = x + 1; y < space.n; ++y) {
            if (label[y] >= 0) continue;
            bool separated = false;
            for (Mask c : clopens)
                if (has_point(c, x) != has_point(c, y)) {
                    separated = true;
                    break;
                }
            if (!separated) label[y] = x;
        }
    }
    return Partition::from_labels(space.n, label);
}

Partition maps_oracle_partition(const FiniteSpace& space) {
    if (space.n == 0) return Partition::from_blocks(0, {});
    // Discrete targets of size n suffice: a map into a larger discrete space
    // hits at most n values, so it factors through one of this size.
    if (space.n > 8)
        throw Error(Errc::limit_exceeded,
                    "maps oracle enumerates " + std::to_string(space.n) + "^" +
                        std::to_string(space.n) + " assignments; supported up to 8 points");
    const FiniteSpace target = discrete_space(space.n);
    std::vector<std::vector<bool>> agree(space.n, std::vector<bool>(space.n, true));
    for (const ContinuousMap& m : enumerate_continuous_maps(space, target))
        for (int x = 0; x < space.n; ++x)
            for (int y = x + 1; y < space.n; ++y)
                if (m.assignment[x] != m.assignment[y]) agree[x][y] = false;
    std::vector<int> label(space.n, -1);
    for (int x = 0; x < space.n; ++x) {
        if (label[x] >= 0) continue;
        label[x] = x;
        for (int y = x + 1; y < space.n; ++y)
            if (label[y] < 0 && agree[x][y]) label[y] = x;
    }
    return Partition::from_labels(space.n, label);
}

}  // namespace

Quotient quotient_by(const FiniteSpace& space, const Partition& partition) {
    if (partition.n != space.n)
        throw Error(Errc::partition_mismatch,
                    "partition of " + std::to_string(partition.n) + " points against a space of " +
                        std::to_string(space.n));
    const int k = partition.size();
    std::vector<Mask> opens;
    for (Mask candidate = 0; candidate < (Mask{1} << k); ++candidate) {
        Mask pre = 0;
        for (int i : set_points(candidate)) pre |= partition.blocks[i];
        if (space.has_open(pre)) opens.push_back(candidate);
    }
    FiniteSpace quotient_space{k, std::move(opens)};
    assert(!continuity_violation(space, quotient_space, partition.block_of));
    ContinuousMap projection{space, quotient_space, partition.block_of};
    return Quotient{space, partition, std::move(quotient_space), std::move(projection)};
}

Quotient collapse_closed(const FiniteSpace& space, Mask closed_set) {
    if (closed_set & ~space.full())
        throw Error(Errc::index_out_of_range,
                    "set " + set_to_string(closed_set) + " is not contained in a carrier of size " +
                        std::to_string(space.n),
                    closed_set);
    if (closed_set == 0) throw Error(Errc::empty_collapse_set, "cannot collapse the empty set");
    if (!space.has_open(space.full() & ~closed_set))
        throw Error(Errc::not_closed, "set " + set_to_string(closed_set) + " is not closed",
                    closed_set);
    std::vector<Mask> blocks{closed_set};
    for (int x = 0; x < space.n; ++x)
        if (!has_point(closed_set, x)) blocks.push_back(point_bit(x));
    return quotient_by(space, Partition::from_blocks(space.n, std::move(blocks)));
}

Partition hausdorff_partition(const FiniteSpace& space, PartitionStrategy strategy) {
    switch (strategy) {
        case PartitionStrategy::components: return connected_components(space);
        case PartitionStrategy::clopen: return clopen_partition(space);
        case PartitionStrategy::maps_oracle: return maps_oracle_partition(space);
    }
    throw Error(Errc::invalid_parameter, "unknown partition strategy");
}

Reflection hausdorff_reflection(const FiniteSpace& space, PartitionStrategy strategy) {
    Quotient q = quotient_by(space, hausdorff_partition(space, strategy));
    if (!is_hausdorff(q.space))
        throw std::logic_error("reflection produced a non-Hausdorff quotient");
    std::vector<Mask> certificate;
    certificate.reserve(q.space.n);
    for (int i = 0; i < q.space.n; ++i) {
        if (!q.space.has_open(point_bit(i)))
            throw std::logic_error("reflection produced a non-discrete quotient");
        certificate.push_back(point_bit(i));
    }
    return Reflection{std::move(q), std::move(certificate)};
}

ContinuousMap factor_through_reflection(const Reflection& reflection, const ContinuousMap& f) {
    if (f.dom != reflection.quotient.source)
        throw Error(Errc::domain_mismatch, "map domain differs from the reflected space");
    if (!is_hausdorff(f.cod))
        throw Error(Errc::codomain_not_hausdorff, "factoring requires a Hausdorff codomain");
    const Partition& partition = reflection.quotient.partition;
    std::vector<int> a(partition.size());
    for (int i = 0; i < partition.size(); ++i) {
        const int rep = first_point(partition.blocks[i]);
        for (int p : set_points(partition.blocks[i]))
            if (f.assignment[p] != f.assignment[rep])
                throw Error(Errc::not_constant_on_block,
                            "map is not constant on block " + set_to_string(partition.blocks[i]),
                            partition.blocks[i]);
        a[i] = f.assignment[rep];
    }
    if (continuity_violation(reflection.space(), f.cod, a))
        throw std::logic_error("factored map is not continuous");
    return ContinuousMap{reflection.space(), f.cod, std::move(a)};
}

}  // namespace fintop
