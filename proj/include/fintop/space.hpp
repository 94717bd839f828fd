#pragma once

#include <optional>
#include <vector>

#include "fintop/mask.hpp"
#include "fintop/partition.hpp"

namespace fintop {

// Finite topological space: carrier {0..n-1} plus the family of open sets in
// canonical form (sorted ascending as masks, duplicate free). Always contains
// the empty set and the full carrier and is closed under pairwise union and
// intersection; validate_topology is the only intended entry point for
// untrusted families.
struct FiniteSpace {
    int n = 0;
    std::vector<Mask> opens;

    Mask full() const { return full_mask(n); }
    bool has_open(Mask m) const;
    bool operator==(const FiniteSpace&) const = default;
};

struct SeparationWitness {
    Mask o1 = 0;
    Mask o2 = 0;
    bool operator==(const SeparationWitness&) const = default;
};

struct SeparationAxioms {
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
    bool operator==(const SeparationAxioms&) const = default;
};

// Specialization preorder: x <= y iff x lies in closure({y}).
struct Preorder {
    int n = 0;
    std::vector<Mask> above;  // above[x] = { y : x <= y }

    bool leq(int x, int y) const { return has_point(above[x], y); }
    bool operator==(const Preorder&) const = default;
};

FiniteSpace validate_topology(int n, std::vector<Mask> family);

Mask closure(const FiniteSpace& space, Mask s);
Mask interior(const FiniteSpace& space, Mask s);
bool is_dense(const FiniteSpace& space, Mask s);

bool is_hausdorff(const FiniteSpace& space);

// Lexicographically first disjoint pair of opens separating x from y, scanning
// the canonical open family for the first component and then the second.
std::optional<SeparationWitness> separation_witness(const FiniteSpace& space, int x, int y);

SeparationAxioms separation_axioms(const FiniteSpace& space);

Preorder specialization_preorder(const FiniteSpace& space);

// Components of the comparability graph of the specialization preorder,
// as a partition with blocks ordered by minimal element.
Partition connected_components(const FiniteSpace& space);

}  // namespace fintop
