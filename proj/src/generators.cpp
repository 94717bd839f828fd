#include "fintop/generators.hpp"

#include "fintop/errors.hpp"

namespace fintop {

FiniteSpace discrete_space(int n) {
    if (n < 0) throw Error(Errc::invalid_parameter, "point count must be nonnegative");
    if (n > max_points)
        throw Error(Errc::too_many_points, "carrier size " + std::to_string(n) +
                                               " exceeds the supported maximum of " +
                                               std::to_string(max_points));
    std::vector<Mask> opens;
    opens.reserve(size_t{1} << n);
    for (Mask m = 0; m < (Mask{1} << n); ++m) opens.push_back(m);
    return FiniteSpace{n, std::move(opens)};
}

FiniteSpace indiscrete_space(int n) {
    if (n < 0) throw Error(Errc::invalid_parameter, "point count must be nonnegative");
    if (n > max_points)
        throw Error(Errc::too_many_points, "carrier size " + std::to_string(n) +
                                               " exceeds the supported maximum of " +
                                               std::to_string(max_points));
    if (n == 0) return FiniteSpace{0, {0}};
    return FiniteSpace{n, {0, full_mask(n)}};
}

FiniteSpace sierpinski_space() { return validate_topology(2, {0b00, 0b10, 0b11}); }

FiniteSpace pseudo_circle_space() {
    const Mask minimal[] = {0b0001, 0b0010, 0b0111, 0b1011};
    std::vector<Mask> opens;
    for (Mask pick = 0; pick < 16; ++pick) {
        Mask u = 0;
        for (int i : set_points(pick)) u |= minimal[i];
        opens.push_back(u);
    }
    return validate_topology(4, std::move(opens));
}

FiniteSpace disjoint_union(const FiniteSpace& a, const FiniteSpace& b) {
    std::vector<Mask> opens;
    opens.reserve(a.opens.size() * b.opens.size());
    for (Mask ob : b.opens)
        for (Mask oa : a.opens) opens.push_back(oa | (ob << a.n));
    return validate_topology(a.n + b.n, std::move(opens));
}

}  // namespace fintop
