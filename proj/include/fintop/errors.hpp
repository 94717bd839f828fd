#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fintop {

enum class Errc {
    missing_empty,
    missing_full,
    not_closed_under_union,
    not_closed_under_intersection,
    index_out_of_range,
    too_many_points,
    same_point,
    not_continuous,
    codomain_mismatch,
    partition_mismatch,
    not_closed,
    empty_collapse_set,
    codomain_not_hausdorff,
    domain_mismatch,
    not_constant_on_block,
    not_hausdorff_domain,
    not_hausdorff_codomain,
    invalid_bound,
    limit_exceeded,
    invalid_parameter,
    parse_error,
};

const char* errc_name(Errc c);

// Carries the offending sets (as masks) when a check names one or two of them.
struct Error : std::runtime_error {
    Errc code;
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    Error(Errc code, const std::string& what, std::uint32_t a = 0, std::uint32_t b = 0)
        : std::runtime_error(what), code(code), a(a), b(b) {}
};

}  // namespace fintop
