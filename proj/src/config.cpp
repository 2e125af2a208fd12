#include "dbent/config.hpp"

#include <cstdlib>
#include <string>

namespace dbent {

SizeCaps SizeCaps::from_env()
{
    SizeCaps caps;
    const char* raw = std::getenv("BENT_SIZE_CAP");
    if (!raw || !*raw) return caps;
    try {
        std::size_t used = 0;
        const unsigned long long cap = std::stoull(raw, &used);
        if (used != std::string(raw).size() || cap == 0) return caps;
        caps.transform_points = caps.table_points = caps.bruteforce_set = caps.sigma_candidates = cap;
    } catch (const std::exception&) {
        // malformed value: keep defaults
    }
    return caps;
}

const SizeCaps& default_caps()
{
    static const SizeCaps caps = SizeCaps::from_env();
    return caps;
}

}  // namespace dbent
