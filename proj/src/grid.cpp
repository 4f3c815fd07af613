#include "flowtime/grid.hpp"

#include <algorithm>
#include <string>

namespace flowtime {

SlotGrid SlotGrid::from(const Schedule& schedule, std::int64_t machines,
                        Time horizon) {
    if (horizon < 0)
        horizon = schedule_horizon(schedule);
    SlotGrid grid;
    grid.machines = machines;
    grid.horizon = horizon;
    grid.cells.assign(
        static_cast<std::size_t>(machines) * static_cast<std::size_t>(horizon),
        kIdle);
    for (const ExecInterval& iv : schedule.intervals) {
        if (iv.machine < 1 || iv.machine > machines)
            throw Error(Errc::invalid_instance,
                        "machine index out of range in schedule");
        if (iv.start < 0 || iv.start >= iv.end)
            throw Error(Errc::invalid_instance, "malformed interval");
        const Time lo = iv.start;
        const Time hi = std::min(iv.end, horizon);
        for (Time t = lo; t < hi; ++t) {
            JobId& cell = grid.at(iv.machine, t);
            if (cell != kIdle)
                throw Error(Errc::invalid_instance,
                            "machine " + std::to_string(iv.machine) +
                                " double-booked at slot " +
                                std::to_string(t));
            cell = iv.job;
        }
    }
    return grid;
}

Schedule SlotGrid::to_schedule() const {
    Schedule schedule;
    for (std::int64_t m = 1; m <= machines; ++m) {
        Time run_start = -1;
        JobId run_job = kIdle;
        for (Time t = 0; t <= horizon; ++t) {
            const JobId job = t < horizon ? at(m, t) : kIdle;
            if (job == run_job && job != kIdle)
                continue;
            if (run_job != kIdle)
                schedule.intervals.push_back({run_job, m, run_start, t});
            run_job = job;
            run_start = t;
        }
    }
    return schedule;
}

Schedule normalize_vertical(const Instance& instance,
                            const Schedule& schedule) {
    SlotGrid grid = SlotGrid::from(schedule, instance.machines());
    const JobTable& table = instance.table();

    std::vector<JobId> column;
    column.reserve(static_cast<std::size_t>(grid.machines));
    for (Time t = 0; t < grid.horizon; ++t) {
        column.clear();
        for (std::int64_t m = 1; m <= grid.machines; ++m)
            if (grid.at(m, t) != SlotGrid::kIdle)
                column.push_back(grid.at(m, t));
        std::sort(column.begin(), column.end(), [&](JobId a, JobId b) {
            const Job* ja = table.find(a);
            const Job* jb = table.find(b);
            if (!ja || !jb)
                throw Error(Errc::unknown_job,
                            "schedule references a job not in the instance");
            const int ra = vertical_rank(ja->kind);
            const int rb = vertical_rank(jb->kind);
            return std::tie(ra, a) < std::tie(rb, b);
        });
        for (std::int64_t m = 1; m <= grid.machines; ++m)
            grid.at(m, t) = m <= static_cast<std::int64_t>(column.size())
                                ? column[static_cast<std::size_t>(m - 1)]
                                : SlotGrid::kIdle;
    }
    return grid.to_schedule();
}

} // namespace flowtime
