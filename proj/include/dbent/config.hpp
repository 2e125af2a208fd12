#pragma once

#include <cstdint>

namespace dbent {

/// Upper bounds on the explicit enumerations performed by the library.
/// The environment variable BENT_SIZE_CAP, when set to a positive integer,
/// replaces every cap at once.
struct SizeCaps {
    std::uint64_t transform_points = 531441;  // 3^12
    std::uint64_t table_points = 43046721;    // 3^16
    std::uint64_t bruteforce_set = 65536;
    std::uint64_t sigma_candidates = 6561;

    static SizeCaps from_env();
};

const SizeCaps& default_caps();

}  // namespace dbent
