#include "flowtime/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_map>

namespace flowtime {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Micro {
    std::vector<Time> release;
    std::vector<Time> ptime;
    std::vector<JobId> id;
    std::int64_t machines = 1;
    Time horizon = 0;

    std::size_t size() const { return release.size(); }
};

Micro load_micro(const Instance& instance, Time horizon) {
    const JobTable& table = instance.table();
    if (static_cast<std::int64_t>(table.jobs.size()) > ExactGuards::max_jobs)
        throw Error(Errc::too_large, "exact solver handles at most " +
                                         std::to_string(ExactGuards::max_jobs) +
                                         " jobs");
    std::int64_t total = 0;
    for (const Job& job : table.jobs)
        total = checked_add(total, job.ptime);
    if (total > ExactGuards::max_total_ptime)
        throw Error(Errc::too_large,
                    "exact solver handles at most " +
                        std::to_string(ExactGuards::max_total_ptime) +
                        " units of total work");
    if (horizon > ExactGuards::max_horizon)
        throw Error(Errc::too_large,
                    "exact solver handles horizons up to " +
                        std::to_string(ExactGuards::max_horizon));
    if (horizon < 1)
        throw Error(Errc::no_schedule, "horizon must be positive");

    Micro micro;
    micro.machines = instance.machines();
    micro.horizon = horizon;
    for (const Job& job : table.jobs) {
        micro.release.push_back(job.release);
        micro.ptime.push_back(job.ptime);
        micro.id.push_back(job.id);
    }
    return micro;
}

// state key: 6 bits of time, 7 bits of remaining work per job
std::uint64_t state_key(Time t, const std::vector<Time>& rem) {
    std::uint64_t key = static_cast<std::uint64_t>(t) << 56;
    for (std::size_t i = 0; i < rem.size(); ++i)
        key |= static_cast<std::uint64_t>(rem[i]) << (7 * i);
    return key;
}

// Optimal completion-time sum when jobs may be split across machines
// freely: at each slot the aggregate capacity m goes to the released
// jobs with the smallest remaining work. Admissible lower bound.
std::int64_t fluid_bound(const Micro& micro, Time from,
                         const std::vector<Time>& rem) {
    std::vector<Time> work = rem;
    std::int64_t completions = 0;
    std::size_t left = 0;
    for (Time w : work)
        if (w > 0)
            ++left;
    std::vector<std::size_t> order(work.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    for (Time t = from; left > 0; ++t) {
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) {
                      return std::tie(work[a], a) < std::tie(work[b], b);
                  });
        std::int64_t cap = micro.machines;
        for (std::size_t i : order) {
            if (cap == 0)
                break;
            if (work[i] == 0 || micro.release[i] > t)
                continue;
            const Time take = std::min<Time>(work[i], cap);
            work[i] -= take;
            cap -= take;
            if (work[i] == 0) {
                completions += t + 1;
                --left;
            }
        }
    }
    return completions;
}

struct Solver {
    const Micro& micro;
    struct Entry {
        std::int64_t value;
        std::uint16_t choice;
    };
    std::unordered_map<std::uint64_t, Entry> memo;

    explicit Solver(const Micro& m) : micro(m) {}

    // minimum sum of completion times of the still-unfinished jobs,
    // starting at slot t; kInf when the horizon cannot fit the work
    std::int64_t solve(Time t, std::vector<Time>& rem) {
        bool done = true;
        for (Time w : rem)
            if (w > 0) {
                done = false;
                break;
            }
        if (done)
            return 0;
        if (t >= micro.horizon)
            return kInf;

        const std::uint64_t key = state_key(t, rem);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second.value;

        std::uint16_t avail_mask = 0;
        int avail = 0;
        for (std::size_t i = 0; i < rem.size(); ++i)
            if (rem[i] > 0 && micro.release[i] <= t) {
                avail_mask |= static_cast<std::uint16_t>(1u << i);
                ++avail;
            }

        std::int64_t best = kInf;
        std::uint16_t best_choice = 0;
        if (avail == 0) {
            best = solve(t + 1, rem);
        } else {
            const int need = static_cast<int>(
                std::min<std::int64_t>(micro.machines, avail));
            // subsets of the available jobs with exactly `need` members,
            // ascending mask order for a deterministic argmin
            for (std::uint16_t mask = 1;
                 mask < (1u << rem.size()); ++mask) {
                if ((mask & ~avail_mask) != 0)
                    continue;
                if (std::popcount(mask) != need)
                    continue;
                std::int64_t now = 0;
                for (std::size_t i = 0; i < rem.size(); ++i)
                    if (mask & (1u << i)) {
                        --rem[i];
                        if (rem[i] == 0)
                            now += t + 1;
                    }
                const std::int64_t child_lb =
                    now + fluid_bound(micro, t + 1, rem);
                if (child_lb < best) {
                    const std::int64_t value = now + solve(t + 1, rem);
                    if (value < best) {
                        best = value;
                        best_choice = mask;
                    }
                }
                for (std::size_t i = 0; i < rem.size(); ++i)
                    if (mask & (1u << i))
                        ++rem[i];
            }
        }
        memo.emplace(key, Entry{best, best_choice});
        return best;
    }
};

} // namespace

std::int64_t fluid_srpt_bound(const Instance& instance, Time from) {
    const JobTable& table = instance.table();
    Micro micro;
    micro.machines = instance.machines();
    std::vector<Time> rem;
    for (const Job& job : table.jobs) {
        micro.release.push_back(job.release);
        micro.ptime.push_back(job.ptime);
        rem.push_back(job.ptime);
    }
    return fluid_bound(micro, from, rem);
}

ExactResult exact_solve(const Instance& instance, Time horizon) {
    const Micro micro = load_micro(instance, horizon);
    Solver solver(micro);
    std::vector<Time> rem = micro.ptime;
    const std::int64_t value = solver.solve(0, rem);
    if (value >= kInf)
        throw Error(Errc::no_schedule,
                    "no complete schedule fits in the horizon");

    // replay the memoized choices into a schedule
    Schedule schedule;
    std::vector<Time> state = micro.ptime;
    for (Time t = 0; t < micro.horizon; ++t) {
        bool done = true;
        for (Time w : state)
            if (w > 0) {
                done = false;
                break;
            }
        if (done)
            break;
        auto it = solver.memo.find(state_key(t, state));
        const std::uint16_t mask =
            it == solver.memo.end() ? 0 : it->second.choice;
        std::int64_t machine = 1;
        for (std::size_t i = 0; i < state.size(); ++i)
            if (mask & (1u << i)) {
                schedule.intervals.push_back(
                    {micro.id[i], machine++, t, t + 1});
                --state[i];
            }
    }

    // merge unit slots into maximal intervals per (job, machine)
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

    ExactResult result;
    result.objective = evaluate(instance, merged);
    result.schedule = std::move(merged);
    return result;
}

ExactResult exact_solve(const Instance& instance) {
    Time max_release = 0;
    std::int64_t total = 0;
    for (const Job& job : instance.jobs()) {
        max_release = std::max(max_release, job.release);
        total = checked_add(total, job.ptime);
    }
    return exact_solve(instance, checked_add(max_release, total));
}

bool verify_optimal(const Instance& instance, const Schedule& schedule) {
    const ObjectiveBreakdown given = evaluate(instance, schedule);
    const ExactResult best = exact_solve(instance);
    return given.total_completion == best.objective.total_completion;
}

} // namespace flowtime
