#ifndef FLOWTIME_TEST_HELPERS_HPP
#define FLOWTIME_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "flowtime/algorithms.hpp"
#include "flowtime/grid.hpp"
#include "flowtime/model.hpp"

namespace flowtime::test {

inline Instance make_instance(std::int64_t machines,
                              std::vector<Job> jobs) {
    return Instance(machines, std::move(jobs));
}

/// Shorthand: jobs as (release, ptime) with ids 1.., kind Generic.
inline Instance quick_instance(std::int64_t machines,
                               std::vector<std::pair<Time, Time>> jobs) {
    std::vector<Job> out;
    JobId id = 1;
    for (auto [release, ptime] : jobs)
        out.push_back(Job{id++, release, ptime, JobKind::Generic});
    return Instance(machines, std::move(out));
}

/// Non-idling randomized list schedule: every slot runs the available
/// jobs with the smallest (random priority, id). Feasible and complete
/// for any instance.
inline Schedule random_feasible_schedule(const Instance& instance,
                                         std::uint64_t seed) {
    const JobTable& table = instance.table();
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> priority(table.jobs.size());
    for (auto& p : priority)
        p = rng();

    struct Arrival {
        Time release;
        std::size_t index;
    };
    std::vector<Arrival> arrivals(table.jobs.size());
    for (std::size_t i = 0; i < table.jobs.size(); ++i)
        arrivals[i] = {table.jobs[i].release, i};
    std::sort(arrivals.begin(), arrivals.end(), [](auto& a, auto& b) {
        return a.release < b.release;
    });

    std::vector<Time> remaining(table.jobs.size());
    for (std::size_t i = 0; i < table.jobs.size(); ++i)
        remaining[i] = table.jobs[i].ptime;

    // (priority, id) -> index
    std::set<std::tuple<std::uint64_t, JobId, std::size_t>> ready;
    std::size_t next_arrival = 0;
    std::size_t unfinished = table.jobs.size();
    Time t = 0;
    Schedule schedule;
    std::vector<std::size_t> chosen;

    while (unfinished > 0) {
        while (next_arrival < arrivals.size() &&
               arrivals[next_arrival].release <= t) {
            const std::size_t i = arrivals[next_arrival].index;
            ready.insert({priority[i], table.jobs[i].id, i});
            ++next_arrival;
        }
        if (ready.empty()) {
            t = arrivals[next_arrival].release;
            continue;
        }
        chosen.clear();
        for (auto it = ready.begin();
             it != ready.end() &&
             chosen.size() <
                 static_cast<std::size_t>(instance.machines());
             ++it)
            chosen.push_back(std::get<2>(*it));
        std::int64_t machine = 1;
        for (std::size_t i : chosen) {
            schedule.intervals.push_back(
                {table.jobs[i].id, machine++, t, t + 1});
            ready.erase({priority[i], table.jobs[i].id, i});
            if (--remaining[i] == 0)
                --unfinished;
            else
                ready.insert({priority[i], table.jobs[i].id, i});
        }
        ++t;
    }

    // merge unit slots into runs to keep interval lists small
    std::sort(schedule.intervals.begin(), schedule.intervals.end(),
              [](const ExecInterval& a, const ExecInterval& b) {
                  return std::tie(a.machine, a.start, a.job) <
                         std::tie(b.machine, b.start, b.job);
              });
    Schedule merged;
    for (const ExecInterval& iv : schedule.intervals) {
        if (!merged.intervals.empty()) {
            ExecInterval& last = merged.intervals.back();
            if (last.job == iv.job && last.machine == iv.machine &&
                last.end == iv.start) {
                last.end = iv.end;
                continue;
            }
        }
        merged.intervals.push_back(iv);
    }
    return merged;
}

/// Ground-truth optimum for micro instances: plain exhaustive search over
/// all per-slot subsets of released jobs, idling allowed, no pruning and
/// no memoization. Independent of the library's solver.
inline std::int64_t exhaustive_optimum(const Instance& instance,
                                       Time horizon) {
    const JobTable& table = instance.table();
    const std::size_t n = table.jobs.size();
    const std::int64_t m = instance.machines();

    std::vector<Time> rem(n);
    for (std::size_t i = 0; i < n; ++i)
        rem[i] = table.jobs[i].ptime;

    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    auto rec = [&](auto&& self, Time t, std::int64_t acc) -> void {
        bool done = true;
        for (Time w : rem)
            if (w > 0) {
                done = false;
                break;
            }
        if (done) {
            best = std::min(best, acc);
            return;
        }
        if (t >= horizon || acc >= best)
            return;
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < n; ++i)
            if (rem[i] > 0 && table.jobs[i].release <= t)
                avail.push_back(i);
        const std::uint32_t limit = 1u << avail.size();
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            if (std::popcount(mask) > m)
                continue;
            std::int64_t now = 0;
            for (std::size_t b = 0; b < avail.size(); ++b)
                if (mask & (1u << b)) {
                    --rem[avail[b]];
                    if (rem[avail[b]] == 0)
                        now += t + 1;
                }
            self(self, t + 1, acc + now);
            for (std::size_t b = 0; b < avail.size(); ++b)
                if (mask & (1u << b))
                    ++rem[avail[b]];
        }
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace flowtime::test

#endif
