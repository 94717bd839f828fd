#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "fintop/generators.hpp"
#include "fintop/maps.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fintop;
using support::code_of;
using support::small_spaces;

namespace {

FiniteSpace relabel(const FiniteSpace& s, const std::vector<int>& perm) {
    std::vector<Mask> family;
    for (Mask o : s.opens) {
        Mask m = 0;
        for (int p : set_points(o)) m |= point_bit(perm[p]);
        family.push_back(m);
    }
    return validate_topology(s.n, family);
}

}  // namespace

TEST_CASE("make_map enforces continuity and reports the first bad open") {
    const FiniteSpace s = sierpinski_space();
    const FiniteSpace d2 = discrete_space(2);

    try {
        (void)make_map(s, d2, {0, 1});
        FAIL("expected an Error");
    } catch (const Error& e) {
        CHECK(e.code == Errc::not_continuous);
        CHECK(e.a == 0b01);
    }
    CHECK(continuity_violation(s, d2, std::vector<int>{0, 1}) == Mask{0b01});
    CHECK(continuity_violation(s, d2, std::vector<int>{1, 0}) == Mask{0b10});
    CHECK_FALSE(continuity_violation(s, d2, std::vector<int>{0, 0}).has_value());
    CHECK_FALSE(continuity_violation(s, s, std::vector<int>{0, 1}).has_value());

    CHECK(code_of([&] { (void)make_map(s, d2, {0}); }) == Errc::invalid_parameter);
    CHECK(code_of([&] { (void)make_map(s, d2, {0, 2}); }) == Errc::index_out_of_range);
    CHECK(code_of([&] { (void)make_map(s, d2, {0, -1}); }) == Errc::index_out_of_range);
}

TEST_CASE("identity, constant, composition, image") {
    const FiniteSpace s = sierpinski_space();
    const FiniteSpace d3 = discrete_space(3);

    const ContinuousMap id = identity_map(s);
    CHECK(id.assignment == std::vector<int>{0, 1});
    CHECK(image(id) == 0b11);

    const ContinuousMap c = constant_map(d3, s, 1);
    CHECK(c.assignment == std::vector<int>{1, 1, 1});
    CHECK(image(c) == 0b10);
    CHECK(code_of([&] { (void)constant_map(d3, s, 2); }) == Errc::index_out_of_range);

    const ContinuousMap inc = make_map(discrete_space(1), d3, {2});
    const ContinuousMap swap = make_map(d3, d3, {1, 0, 2});
    const ContinuousMap both = compose(swap, inc);
    CHECK(both.assignment == std::vector<int>{2});
    CHECK(both.dom == discrete_space(1));
    CHECK(both.cod == d3);
    CHECK(code_of([&] { (void)compose(inc, swap); }) == Errc::codomain_mismatch);
}

TEST_CASE("map enumeration is lexicographic and matches the oracle count") {
    const FiniteSpace s = sierpinski_space();
    const FiniteSpace d2 = discrete_space(2);

    const auto into_discrete = enumerate_continuous_maps(s, d2);
    REQUIRE(into_discrete.size() == 2);
    CHECK(into_discrete[0].assignment == std::vector<int>{0, 0});
    CHECK(into_discrete[1].assignment == std::vector<int>{1, 1});

    CHECK(enumerate_continuous_maps(s, s).size() == 3);
    CHECK(oracles::count_continuous(s, s) == 3);

    for (const FiniteSpace& a : small_spaces(3))
        for (const FiniteSpace& b : small_spaces(3)) {
            const auto maps = enumerate_continuous_maps(a, b);
            CHECK(long(maps.size()) == oracles::count_continuous(a, b));
            for (size_t i = 0; i < maps.size(); ++i) {
                CHECK(oracles::continuous(a, b, maps[i].assignment));
                if (i > 0) CHECK(maps[i - 1].assignment < maps[i].assignment);
            }
        }
}

TEST_CASE("map enumeration under empty carriers") {
    const FiniteSpace empty = discrete_space(0);
    const FiniteSpace d2 = discrete_space(2);
    CHECK(enumerate_continuous_maps(empty, d2).size() == 1);
    CHECK(enumerate_continuous_maps(empty, d2)[0].assignment.empty());
    CHECK(enumerate_continuous_maps(d2, empty).empty());
    CHECK(enumerate_continuous_maps(empty, empty).size() == 1);
    CHECK(image(make_map(empty, d2, {})) == 0);
}

TEST_CASE("homeomorphism checks") {
    const FiniteSpace s = sierpinski_space();
    const FiniteSpace d2 = discrete_space(2);

    CHECK(is_homeomorphism(identity_map(s)));
    CHECK_FALSE(is_homeomorphism(constant_map(d2, d2, 0)));

    // Neither bijection between the Sierpinski space and the discrete pair is
    // even continuous.
    CHECK(code_of([&] { (void)make_map(s, d2, {0, 1}); }) == Errc::not_continuous);
    CHECK(code_of([&] { (void)make_map(s, d2, {1, 0}); }) == Errc::not_continuous);

    // A continuous bijection need not be a homeomorphism: the identity
    // assignment from the discrete pair onto the Sierpinski space.
    const ContinuousMap finer = make_map(d2, s, {0, 1});
    CHECK_FALSE(is_homeomorphism(finer));
}

TEST_CASE("find_homeomorphism returns the first witness in lexicographic order") {
    const FiniteSpace s = sierpinski_space();
    const FiniteSpace mirrored = validate_topology(2, {0b00, 0b01, 0b11});

    CHECK(find_homeomorphism(s, s) == std::vector<int>{0, 1});
    CHECK(find_homeomorphism(s, mirrored) == std::vector<int>{1, 0});
    CHECK_FALSE(find_homeomorphism(s, discrete_space(2)).has_value());
    CHECK_FALSE(are_homeomorphic(s, discrete_space(2)));
    CHECK(are_homeomorphic(discrete_space(0), discrete_space(0)));
    CHECK_FALSE(are_homeomorphic(discrete_space(0), discrete_space(1)));
}

TEST_CASE("homeomorphism witnesses are sound and relabel-invariant") {
    const std::vector<std::vector<int>> perms3 = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const FiniteSpace& a : small_spaces(3)) {
        CHECK(are_homeomorphic(a, a));
        if (a.n != 3) continue;
        for (const auto& perm : perms3) {
            const FiniteSpace b = relabel(a, perm);
            const auto witness = find_homeomorphism(a, b);
            REQUIRE(witness.has_value());
            CHECK(relabel(a, *witness) == b);
        }
    }
}

TEST_CASE("the 29 topologies on three points fall into 9 classes") {
    const auto all = small_spaces(3);
    std::vector<FiniteSpace> reps;
    for (const FiniteSpace& s : all) {
        if (s.n != 3) continue;
        const bool seen = std::any_of(reps.begin(), reps.end(),
                                      [&](const FiniteSpace& r) { return are_homeomorphic(r, s); });
        if (!seen) reps.push_back(s);
    }
    CHECK(reps.size() == 9);
}
