#pragma once

#include <string>
#include <string_view>

#include "fintop/maps.hpp"
#include "fintop/space.hpp"

namespace fintop {

// Space documents: {"points": 2, "opens": [[], [1], [0, 1]]}, optional "name".
// Map documents: {"dom": <space or reference>, "cod": ..., "assignment": [...]},
// optional "name". A reference is a generator string: "sierpinski", "point",
// "pseudo_circle", "discrete:<k>" or "indiscrete:<k>".
// Serialization always emits the canonical inline form; parsing it back gives
// the identical value.

FiniteSpace parse_space(std::string_view text);
std::string serialize_space(const FiniteSpace& space);

ContinuousMap parse_map(std::string_view text);
std::string serialize_map(const ContinuousMap& f);

FiniteSpace resolve_space_reference(std::string_view ref);

}  // namespace fintop
