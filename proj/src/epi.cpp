#include "fintop/epi.hpp"

#include <cassert>

#include "fintop/enumerate.hpp"
#include "fintop/errors.hpp"
#include "fintop/generators.hpp"
#include "fintop/quotient.hpp"

namespace fintop {

namespace {

void require_hausdorff_ends(const ContinuousMap& f) {
    if (!is_hausdorff(f.dom))
        throw Error(Errc::not_hausdorff_domain, "map domain is not Hausdorff");
    if (!is_hausdorff(f.cod))
        throw Error(Errc::not_hausdorff_codomain, "map codomain is not Hausdorff");
}

bool equal_after(const ContinuousMap& g, const ContinuousMap& h, const ContinuousMap& f) {
    for (int v : f.assignment)
        if (g.assignment[v] != h.assignment[v]) return false;
    return true;
}

}  // namespace

EpiVerdict is_epi_dense(const ContinuousMap& f) {
    require_hausdorff_ends(f);
    return EpiVerdict{is_dense(f.cod, image(f)), EpiMethod::dense_test, std::nullopt, false};
}

EpiVerdict is_epi_bruteforce(const ContinuousMap& f, Category category, int target_bound) {
    if (target_bound < 1)
        throw Error(Errc::invalid_bound, "target bound must be at least 1");
    if (category == Category::haus) require_hausdorff_ends(f);

    EpiVerdict verdict{true, EpiMethod::brute_force, std::nullopt,
                       category == Category::haus && target_bound < 2 * f.cod.n};
    for (int k = 1; k <= target_bound; ++k) {
        std::vector<FiniteSpace> targets;
        if (category == Category::haus)
            targets.push_back(discrete_space(k));
        else
            targets = enumerate_topologies(k);
        for (const FiniteSpace& target : targets) {
            const auto maps = enumerate_continuous_maps(f.cod, target);
            for (size_t i = 0; i < maps.size(); ++i)
                for (size_t j = 0; j < maps.size(); ++j) {
                    if (i == j) continue;
                    if (equal_after(maps[i], maps[j], f)) {
                        verdict.is_epi = false;
                        verdict.counterexample = Cospan{maps[i], maps[j]};
                        return verdict;
                    }
                }
        }
    }
    return verdict;
}

std::optional<Cospan> non_epi_witness(const ContinuousMap& f) {
    require_hausdorff_ends(f);
    const Mask img = image(f);
    if (is_dense(f.cod, img)) return std::nullopt;

    if (f.dom.n == 0) {
        // Nothing to collapse; any distinct parallel pair works since both
        // composites are the empty map. Take the first two in order.
        const auto maps = enumerate_continuous_maps(f.cod, discrete_space(2));
        return Cospan{maps[0], maps[1]};
    }

    const Mask collapsed = closure(f.cod, img);
    const Quotient q = collapse_closed(f.cod, collapsed);
    const Reflection r = hausdorff_reflection(q.space);
    ContinuousMap g = compose(r.projection(), q.projection);
    ContinuousMap h = constant_map(f.cod, g.cod, g.assignment[first_point(collapsed)]);
    assert(equal_after(g, h, f));  // f lands in the collapsed class
    assert(g.assignment != h.assignment);
    assert(is_hausdorff(g.cod));
    return Cospan{std::move(g), std::move(h)};
}

bool check_prop1_forward(const ContinuousMap& f, int target_bound) {
    require_hausdorff_ends(f);
    if (!is_dense(f.cod, image(f))) return true;
    return is_epi_bruteforce(f, Category::haus, target_bound).is_epi;
}

}  // namespace fintop
