#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

// Continuous map between finite spaces. Instances are only produced with the
// continuity check already passed; treat the fields as read-only.
struct ContinuousMap {
    FiniteSpace dom;
    FiniteSpace cod;
    std::vector<int> assignment;

    int operator()(int p) const { return assignment[p]; }
    bool operator==(const ContinuousMap&) const = default;
};

// Parallel pair out of a common codomain, used as an epi counterexample.
struct Cospan {
    ContinuousMap g;
    ContinuousMap h;
};

// First open of cod (in canonical order) whose preimage is not open, if any.
std::optional<Mask> continuity_violation(const FiniteSpace& dom, const FiniteSpace& cod,
                                         std::span<const int> assignment);

ContinuousMap make_map(FiniteSpace dom, FiniteSpace cod, std::vector<int> assignment);
ContinuousMap identity_map(const FiniteSpace& space);
ContinuousMap constant_map(const FiniteSpace& dom, const FiniteSpace& cod, int value);

// compose(second, first) is second after first.
ContinuousMap compose(const ContinuousMap& second, const ContinuousMap& first);

Mask image(const ContinuousMap& f);

// All continuous maps dom -> cod, assignments in lexicographic order.
std::vector<ContinuousMap> enumerate_continuous_maps(const FiniteSpace& dom,
                                                     const FiniteSpace& cod);

bool is_homeomorphism(const ContinuousMap& f);

// Lexicographically first bijection carrying the open family of a onto the
// open family of b, if one exists. Backtracking pruned by per-point open
// membership counts.
std::optional<std::vector<int>> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b);
bool are_homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace fintop
