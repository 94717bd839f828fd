#pragma once

#include <doctest.h>

#include <functional>
#include <vector>

#include "fintop/enumerate.hpp"
#include "fintop/errors.hpp"

namespace support {

// Runs f, which must throw, and reports the error code it threw with.
inline fintop::Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const fintop::Error& e) {
        return e.code;
    }
    FAIL("expected an Error");
    return fintop::Errc::parse_error;
}

inline std::vector<fintop::FiniteSpace> small_spaces(int max_n) {
    std::vector<fintop::FiniteSpace> all;
    for (int n = 0; n <= max_n; ++n)
        for (const fintop::FiniteSpace& s : fintop::enumerate_topologies(n)) all.push_back(s);
    return all;
}

}  // namespace support
