#include "flowtime/algorithms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "flowtime/grid.hpp"

namespace flowtime {

Schedule mcnaughton_pack(const std::vector<std::pair<JobId, Time>>& jobs,
                         const Window& window) {
    if (window.start >= window.end || window.machines < 1)
        throw Error(Errc::invalid_instance, "malformed window");
    const Time length = window.length();
    std::int64_t total = 0;
    std::set<JobId> ids;
    for (const auto& [id, ptime] : jobs) {
        if (ptime < 1)
            throw Error(Errc::invalid_instance, "ptime must be >= 1");
        if (!ids.insert(id).second)
            throw Error(Errc::invalid_instance, "duplicate job id");
        if (ptime > length)
            throw Error(Errc::too_long,
                        "job " + std::to_string(id) + " of length " +
                            std::to_string(ptime) +
                            " exceeds the window length " +
                            std::to_string(length));
        total = checked_add(total, ptime);
    }
    if (total > checked_mul(window.machines, length))
        throw Error(Errc::capacity,
                    "total work " + std::to_string(total) +
                        " exceeds the window capacity " +
                        std::to_string(window.machines * length));

    Schedule schedule;
    std::int64_t machine = 1;
    Time pos = window.start;
    for (const auto& [id, ptime] : jobs) {
        Time remaining = ptime;
        while (remaining > 0) {
            const Time take = std::min(remaining, window.end - pos);
            schedule.intervals.push_back({id, machine, pos, pos + take});
            pos += take;
            remaining -= take;
            if (pos == window.end) {
                ++machine;
                pos = window.start;
            }
        }
    }
    return schedule;
}

Schedule srpt_single_machine(const Instance& instance) {
    if (instance.machines() != 1)
        throw Error(Errc::invalid_instance,
                    "SRPT scheduler handles exactly one machine");
    const JobTable& table = instance.table();

    struct Pending {
        Time release;
        JobId id;
        std::size_t index;
    };
    std::vector<Pending> arrivals;
    arrivals.reserve(table.jobs.size());
    for (std::size_t i = 0; i < table.jobs.size(); ++i)
        arrivals.push_back({table.jobs[i].release, table.jobs[i].id, i});
    std::sort(arrivals.begin(), arrivals.end(), [](auto& a, auto& b) {
        return std::tie(a.release, a.id) < std::tie(b.release, b.id);
    });

    std::vector<Time> remaining(table.jobs.size());
    for (std::size_t i = 0; i < table.jobs.size(); ++i)
        remaining[i] = table.jobs[i].ptime;

    // (remaining, id) -> index; updated on preemption
    std::set<std::tuple<Time, JobId, std::size_t>> ready;
    std::size_t next_arrival = 0;
    Time now = 0;
    Schedule schedule;

    auto admit_until = [&](Time t) {
        while (next_arrival < arrivals.size() &&
               arrivals[next_arrival].release <= t) {
            const Pending& p = arrivals[next_arrival];
            ready.insert({remaining[p.index], p.id, p.index});
            ++next_arrival;
        }
    };

    admit_until(now);
    while (!ready.empty() || next_arrival < arrivals.size()) {
        if (ready.empty()) {
            now = arrivals[next_arrival].release;
            admit_until(now);
            continue;
        }
        auto it = ready.begin();
        auto [rem, id, index] = *it;
        ready.erase(it);
        // run until completion or the next release, whichever is first
        Time until = now + rem;
        if (next_arrival < arrivals.size())
            until = std::min(until, arrivals[next_arrival].release);
        schedule.intervals.push_back({id, 1, now, until});
        remaining[index] = rem - (until - now);
        now = until;
        if (remaining[index] > 0)
            ready.insert({remaining[index], id, index});
        admit_until(now);
    }

    // merge back-to-back chunks of one job
    Schedule merged;
    for (const ExecInterval& iv : schedule.intervals) {
        if (!merged.intervals.empty()) {
            ExecInterval& last = merged.intervals.back();
            if (last.job == iv.job && last.end == iv.start) {
                last.end = iv.end;
                continue;
            }
        }
        merged.intervals.push_back(iv);
    }
    return merged;
}

CounterexampleArtifacts build_counterexample_schedule() {
    CounterexampleArtifacts art;
    art.tp = ThreePartitionInstance{2, {7, 8, 8, 9, 9, 13}, 27};
    auto [instance, params] = faulty_reduce(art.tp);
    art.instance = std::move(instance);
    art.params = params;

    const std::int64_t n = art.tp.n;
    const Time ay = checked_mul(params.A, art.tp.y);

    // x-jobs wrap-packed into [0, Ay] in id order
    std::vector<std::pair<JobId, Time>> xjobs;
    for (std::int64_t i = 0; i < 3 * n; ++i)
        xjobs.emplace_back(i + 1, params.A * art.tp.xs[i]);
    art.schedule = mcnaughton_pack(xjobs, Window{0, ay, n});

    // per machine: the B-job at Ay, then A unit jobs back to back
    const Time units_start = ay + params.B;
    for (std::int64_t k = 1; k <= n; ++k) {
        art.schedule.intervals.push_back(
            {3 * n + k, k, ay, units_start});
        const JobId base = 4 * n + (k - 1) * params.A + 1;
        for (std::int64_t j = 0; j < params.A; ++j)
            art.schedule.intervals.push_back(
                {base + j, k, units_start + j, units_start + j + 1});
    }
    return art;
}

IdealArtifacts build_ideal_schedule(const ThreePartitionInstance& tp,
                                    const Partition& partition) {
    if (!is_partition_solution(tp, partition))
        throw Error(Errc::bad_partition,
                    "the given partition does not solve the instance");
    auto [instance, params] = corrected_reduce(tp);
    const std::int64_t n = tp.n;

    // machine assignment of each X-job
    std::vector<std::int64_t> machine_of_x(static_cast<std::size_t>(3 * n));
    for (std::size_t k = 0; k < partition.size(); ++k)
        for (std::int64_t index : partition[k])
            machine_of_x[static_cast<std::size_t>(index - 1)] =
                static_cast<std::int64_t>(k + 1);

    SlotGrid grid;
    grid.machines = n;
    grid.horizon = checked_add(params.T, params.opt);
    grid.cells.assign(static_cast<std::size_t>(grid.machines) *
                          static_cast<std::size_t>(grid.horizon),
                      SlotGrid::kIdle);

    // S- and C-jobs sit at their release slots. Units released together
    // go to the highest machines (S) in id order, C-units fill 1..n.
    std::map<Time, std::vector<JobId>> units_by_release;
    for (const Job& job : instance.jobs())
        if (job.kind == JobKind::S || job.kind == JobKind::C)
            units_by_release[job.release].push_back(job.id);
    for (auto& [t, ids] : units_by_release) {
        std::sort(ids.begin(), ids.end());
        if (t >= params.T) {
            // cork block: n C-units, machines 1..n
            for (std::size_t c = 0; c < ids.size(); ++c)
                grid.at(static_cast<std::int64_t>(c + 1), t) = ids[c];
        } else {
            // stairs: s units on machines n-s+1..n
            const std::int64_t s = static_cast<std::int64_t>(ids.size());
            for (std::size_t c = 0; c < ids.size(); ++c)
                grid.at(n - s + static_cast<std::int64_t>(c + 1), t) = ids[c];
        }
    }

    // X_i without preemption at offset (k-1)Lx_i in block i on machine k
    for (std::int64_t i = 1; i <= 3 * n; ++i) {
        const std::int64_t k = machine_of_x[static_cast<std::size_t>(i - 1)];
        const std::int64_t lx = params.L * tp.xs[static_cast<std::size_t>(i - 1)];
        const Time start = params.block_start(i) + (k - 1) * lx;
        const Time len = params.lambda * tp.xs[static_cast<std::size_t>(i - 1)];
        const JobId id = n + i;
        for (Time t = start; t < start + len; ++t)
            grid.at(k, t) = id;
    }

    // F_k fills every remaining slot of machine k in [0, T)
    for (std::int64_t k = 1; k <= n; ++k)
        for (Time t = 0; t < params.T; ++t)
            if (grid.at(k, t) == SlotGrid::kIdle)
                grid.at(k, t) = k; // F-jobs carry ids 1..n

    IdealArtifacts art;
    art.schedule = grid.to_schedule();
    art.instance = std::move(instance);
    art.params = std::move(params);
    return art;
}

} // namespace flowtime
