#include "sas/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sas/model.hpp"

namespace sas {

DeviceStats device_stats(int n) {
    if (n < 2) throw LayoutError("device statistics need n >= 2");
    const std::int64_t k = n;
    DeviceStats s;
    s.mzi_count = 2 * k * (k - 1);
    s.phase_shifter_count = 2 * s.mzi_count;
    std::int64_t depth = 0;
    while ((std::int64_t{1} << depth) < k) ++depth;
    s.active_shifters_per_state = 2 * k * depth;
    s.switch_state_count = 1;
    for (std::uint64_t f = 2; f <= static_cast<std::uint64_t>(n); ++f) {
        if (s.switch_state_count > std::numeric_limits<std::uint64_t>::max() / f) {
            s.switch_state_count = std::numeric_limits<std::uint64_t>::max();
            s.switch_state_overflow = true;
            break;
        }
        s.switch_state_count *= f;
    }
    return s;
}

PathPenalty path_penalty(std::int64_t crossings, double il_per_crossing_db, double xt_per_crossing_db,
                         bool incoherent) {
    if (crossings < 0) throw std::invalid_argument("crossing count must be nonnegative");
    if (il_per_crossing_db < 0) throw std::invalid_argument("insertion loss per crossing must be nonnegative");
    if (xt_per_crossing_db > 0) throw std::invalid_argument("crosstalk per crossing must not be positive");
    PathPenalty p;
    p.total_il_db = static_cast<double>(crossings) * il_per_crossing_db;
    if (crossings == 0) {
        p.worst_case_xt_db = -std::numeric_limits<double>::infinity();
    } else {
        const double factor = incoherent ? 10.0 : 20.0;
        p.worst_case_xt_db = xt_per_crossing_db + factor * std::log10(static_cast<double>(crossings));
    }
    return p;
}

}  // namespace sas
