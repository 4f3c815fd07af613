#ifndef FLOWTIME_EXACT_HPP
#define FLOWTIME_EXACT_HPP

#include <cstdint>

#include "flowtime/model.hpp"

namespace flowtime {

/// Micro-scale guards for the exact solver.
struct ExactGuards {
    static constexpr std::int64_t max_jobs = 8;
    static constexpr std::int64_t max_total_ptime = 64;
    static constexpr Time max_horizon = 32;
};

struct ExactResult {
    Schedule schedule;
    ObjectiveBreakdown objective;
};

/// Provably optimal total-completion-time schedule found by depth-first
/// search over per-slot job subsets (at most m jobs per slot), memoized
/// on (time, remaining work vector) and pruned with an admissible
/// fluid-SRPT lower bound. Deterministic: subsets are explored in
/// ascending bitmask order, so the reported optimum schedule is the
/// lexicographically first one.
/// Throws Errc::too_large when the guards are exceeded and
/// Errc::no_schedule when the horizon is too short.
ExactResult exact_solve(const Instance& instance, Time horizon);

/// Same with horizon = max release + total processing time.
ExactResult exact_solve(const Instance& instance);

/// True iff the schedule's total completion time equals the exact
/// optimum. The schedule must be feasible and complete.
bool verify_optimal(const Instance& instance, const Schedule& schedule);

/// The admissible lower bound used for pruning, exposed for testing:
/// optimal total completion when jobs may be split across machines
/// freely (aggregate capacity m per slot, released jobs only).
std::int64_t fluid_srpt_bound(const Instance& instance, Time from);

} // namespace flowtime

#endif
