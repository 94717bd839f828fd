#pragma once

#include "fintop/maps.hpp"
#include "fintop/partition.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct Quotient {
    FiniteSpace source;
    Partition partition;
    FiniteSpace space;
    ContinuousMap projection;  // source -> space, point to its block
};

enum class PartitionStrategy {
    components,   // blocks of the comparability graph
    clopen,       // identify points no clopen set separates
    maps_oracle,  // identify points no continuous map into a discrete target separates
};

// The reflection keeps the quotient data plus a discreteness certificate:
// every singleton of the quotient carrier, each checked to be open.
struct Reflection {
    Quotient quotient;
    std::vector<Mask> hausdorff_certificate;

    const FiniteSpace& space() const { return quotient.space; }
    const ContinuousMap& projection() const { return quotient.projection; }
};

// Universal quotient topology: a block set is open iff its preimage is open.
// Candidate block sets are scanned exhaustively.
Quotient quotient_by(const FiniteSpace& space, const Partition& partition);

// Collapse a nonempty closed set to a single point, keeping the rest apart.
Quotient collapse_closed(const FiniteSpace& space, Mask closed_set);

// All strategies produce the same partition; components is the cheap default,
// the other two exist as cross-checks.
Partition hausdorff_partition(const FiniteSpace& space,
                              PartitionStrategy strategy = PartitionStrategy::components);

Reflection hausdorff_reflection(const FiniteSpace& space,
                                PartitionStrategy strategy = PartitionStrategy::components);

// Unique continuous map through the reflection with factored . projection = f.
ContinuousMap factor_through_reflection(const Reflection& reflection, const ContinuousMap& f);

}  // namespace fintop
