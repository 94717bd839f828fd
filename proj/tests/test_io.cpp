#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "fintop/generators.hpp"
#include "fintop/serialize.hpp"
#include "support.hpp"

using namespace fintop;
using support::code_of;
using support::small_spaces;

TEST_CASE("space documents parse to canonical spaces") {
    CHECK(parse_space(R"({"points":2,"opens":[[],[1],[0,1]]})") == sierpinski_space());
    CHECK(parse_space(R"({"points":0,"opens":[[]]})") == discrete_space(0));
    CHECK(parse_space(R"({"points":2,"opens":[[0,1],[1],[]],"name":"s"})") == sierpinski_space());
    CHECK(parse_space(R"({"points":3,"opens":[[],[2,1,0],[0,1,2]]})") == indiscrete_space(3));

    CHECK(code_of([] { (void)parse_space(R"({"points":2,"opens":[[],[0],[1]]})"); }) ==
          Errc::missing_full);
    CHECK(code_of([] { (void)parse_space(R"({"points":2,"opens":[[],[0,1)"); }) ==
          Errc::parse_error);
    CHECK(code_of([] { (void)parse_space(R"({"points":2,"opens":[[],[0,1]],"extra":1})"); }) ==
          Errc::parse_error);
    CHECK(code_of([] { (void)parse_space(R"({"points":-1,"opens":[[]]})"); }) ==
          Errc::parse_error);
    CHECK(code_of([] { (void)parse_space(R"({"opens":[[]]})"); }) == Errc::parse_error);
    CHECK(code_of([] { (void)parse_space(R"({"points":2,"opens":[[],[0,1],[7]]})"); }) ==
          Errc::index_out_of_range);
    CHECK(code_of([] { (void)parse_space("[1,2]"); }) == Errc::parse_error);
}

TEST_CASE("space serialization is canonical and round-trips") {
    CHECK(serialize_space(sierpinski_space()) == R"({"points":2,"opens":[[],[1],[0,1]]})");
    CHECK(serialize_space(discrete_space(0)) == R"({"points":0,"opens":[[]]})");
    for (const FiniteSpace& s : small_spaces(4)) CHECK(parse_space(serialize_space(s)) == s);
}

TEST_CASE("map documents with inline spaces") {
    const std::string text = R"({
        "dom": {"points": 1, "opens": [[], [0]]},
        "cod": {"points": 2, "opens": [[], [1], [0, 1]]},
        "assignment": [1],
        "name": "into the open point"
    })";
    const ContinuousMap f = parse_map(text);
    CHECK(f.dom == discrete_space(1));
    CHECK(f.cod == sierpinski_space());
    CHECK(f.assignment == std::vector<int>{1});
    CHECK(parse_map(serialize_map(f)) == f);
}

TEST_CASE("map documents accept named space references") {
    const ContinuousMap f =
        parse_map(R"({"dom":"point","cod":"sierpinski","assignment":[1]})");
    CHECK(f.dom == discrete_space(1));
    CHECK(f.cod == sierpinski_space());

    const ContinuousMap g =
        parse_map(R"({"dom":"discrete:3","cod":"indiscrete:2","assignment":[0,1,0]})");
    CHECK(g.dom == discrete_space(3));
    CHECK(g.cod == indiscrete_space(2));

    CHECK(resolve_space_reference("pseudo_circle") == pseudo_circle_space());
    CHECK(code_of([] { (void)resolve_space_reference("circle"); }) == Errc::parse_error);
    CHECK(code_of([] { (void)resolve_space_reference("discrete:x"); }) == Errc::parse_error);
    CHECK(code_of([] { (void)resolve_space_reference("discrete:"); }) == Errc::parse_error);
}

TEST_CASE("map documents reject bad content") {
    CHECK(code_of([] {
        (void)parse_map(R"({"dom":"point","cod":"sierpinski"})");
    }) == Errc::parse_error);
    CHECK(code_of([] {
        (void)parse_map(R"({"dom":"point","cod":"sierpinski","assignment":[1],"x":0})");
    }) == Errc::parse_error);
    CHECK(code_of([] {
        (void)parse_map(R"({"dom":"point","cod":"sierpinski","assignment":[1,0]})");
    }) == Errc::invalid_parameter);
    CHECK(code_of([] {
        (void)parse_map(R"({"dom":"point","cod":"sierpinski","assignment":[5]})");
    }) == Errc::index_out_of_range);
    CHECK(code_of([] {
        (void)parse_map(R"({"dom":"sierpinski","cod":"discrete:2","assignment":[0,1]})");
    }) == Errc::not_continuous);
}

TEST_CASE("a thousand random maps round-trip") {
    std::mt19937 rng(20240811);
    const auto spaces = small_spaces(3);
    std::uniform_int_distribution<size_t> pick_space(0, spaces.size() - 1);

    int done = 0;
    while (done < 1000) {
        const FiniteSpace& dom = spaces[pick_space(rng)];
        const FiniteSpace& cod = spaces[pick_space(rng)];
        if (cod.n == 0 && dom.n > 0) continue;
        std::vector<int> assignment(dom.n);
        for (int& v : assignment)
            v = std::uniform_int_distribution<int>(0, cod.n - 1)(rng);
        if (continuity_violation(dom, cod, assignment)) continue;
        const ContinuousMap f = make_map(dom, cod, assignment);
        CHECK(parse_map(serialize_map(f)) == f);
        ++done;
    }
}
