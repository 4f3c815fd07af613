#ifndef FLOWTIME_GRID_HPP
#define FLOWTIME_GRID_HPP

#include <cstdint>
#include <vector>

#include "flowtime/model.hpp"

namespace flowtime {

/// Dense machine x time view of a schedule over [0, horizon).
/// Cell value is the job id running in that unit slot, or kIdle.
/// Reduction instances stay around a few million cells, so the dense
/// form is materialized on demand and thrown away after use.
struct SlotGrid {
    static constexpr JobId kIdle = -1;

    std::int64_t machines = 0;
    Time horizon = 0;
    std::vector<JobId> cells; // machines * horizon, machine-major per slot

    JobId& at(std::int64_t machine, Time t) {
        return cells[static_cast<std::size_t>(t) * machines + (machine - 1)];
    }
    JobId at(std::int64_t machine, Time t) const {
        return cells[static_cast<std::size_t>(t) * machines + (machine - 1)];
    }

    /// Builds the grid; horizon defaults to the schedule horizon.
    /// Throws Errc::invalid_instance on machine double-booking or
    /// out-of-range machine indices.
    static SlotGrid from(const Schedule& schedule, std::int64_t machines,
                         Time horizon = -1);

    /// Back to interval form: contiguous same-job runs per machine are
    /// merged, output sorted by (machine, start).
    Schedule to_schedule() const;
};

} // namespace flowtime

#endif
