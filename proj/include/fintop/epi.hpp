#pragma once

#include <optional>

#include "fintop/maps.hpp"

namespace fintop {

enum class Category { haus, top };
enum class EpiMethod { dense_test, brute_force };

struct EpiVerdict {
    bool is_epi = false;
    EpiMethod method = EpiMethod::dense_test;
    std::optional<Cospan> counterexample;
    // Set when a Hausdorff brute force ran below its completeness threshold
    // of 2 * |codomain|; a clean verdict is then only evidence, not proof.
    bool bound_warning = false;
};

// Epi test for Hausdorff domain and codomain: f is epi iff its image is dense.
EpiVerdict is_epi_dense(const ContinuousMap& f);

// Search for a separating cospan by exhausting codomains up to target_bound
// points: discrete ones in Haus, every labeled topology in Top. Returns the
// first counterexample in enumeration order, if any.
EpiVerdict is_epi_bruteforce(const ContinuousMap& f, Category category, int target_bound);

// Constructive counterexample for a non-dense map between Hausdorff spaces:
// collapse the closure of the image, reflect, and pair the composite with the
// constant map at the collapsed class. Returns nothing when f is dense.
std::optional<Cospan> non_epi_witness(const ContinuousMap& f);

// Dense image implies epi against every Hausdorff target within the bound.
bool check_prop1_forward(const ContinuousMap& f, int target_bound);

}  // namespace fintop
