#pragma once

#include "fintop/space.hpp"

namespace fintop {

FiniteSpace discrete_space(int n);
FiniteSpace indiscrete_space(int n);

// Two points, opens {}, {1}, {0, 1}. The single closed point is 0.
FiniteSpace sierpinski_space();

// Four points with minimal opens {0}, {1}, {0,1,2}, {0,1,3}. Connected but
// far from Hausdorff; its reflection is a single point.
FiniteSpace pseudo_circle_space();

// Carrier of b is shifted up by a.n; opens are unions of one open per summand.
FiniteSpace disjoint_union(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace fintop
