#pragma once

#include <vector>

#include "fintop/space.hpp"

namespace fintop {

inline constexpr int enumerate_default_limit = 4;
inline constexpr int enumerate_hard_limit = 5;

// All labeled topologies on n points in canonical order (families compared as
// characteristic bitmaps over the 2^n candidate masks). With up_to_homeo set,
// only the first representative of each homeomorphism class is kept.
// n up to 4 filters all 2^(2^n) open-set families; n = 5 switches to the
// preorder route below. Larger n raises limit_exceeded.
std::vector<FiniteSpace> enumerate_topologies(int n, bool up_to_homeo = false);

// Definitional route: every subset of the powerset, kept iff it satisfies the
// axioms. Only feasible for n <= 4.
std::vector<FiniteSpace> enumerate_topologies_by_scan(int n);

// Independent route: transitive reflexive relations, each mapped to its family
// of up-sets. Agrees with the scan where both run.
std::vector<FiniteSpace> enumerate_topologies_by_preorders(int n);

}  // namespace fintop
