#pragma once

#include <cstdint>

namespace sas {

/// Component counts of an n x n switch-and-select device built from MZI cells.
struct DeviceStats {
    std::int64_t mzi_count = 0;
    std::int64_t phase_shifter_count = 0;
    std::int64_t active_shifters_per_state = 0;
    std::uint64_t switch_state_count = 0;  // n!, saturated at the maximum when it does not fit
    bool switch_state_overflow = false;
};

DeviceStats device_stats(int n);

struct PathPenalty {
    double total_il_db = 0;
    double worst_case_xt_db = 0;  // -infinity when there are no crossings
};

/// Insertion loss and crosstalk accumulated over `crossings` waveguide crossings. Crosstalk adds
/// in amplitude (coherent worst case) unless `incoherent` is set, in which case powers add.
PathPenalty path_penalty(std::int64_t crossings, double il_per_crossing_db, double xt_per_crossing_db,
                         bool incoherent = false);

}  // namespace sas
