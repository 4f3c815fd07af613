#ifndef FLOWTIME_ALGORITHMS_HPP
#define FLOWTIME_ALGORITHMS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "flowtime/model.hpp"
#include "flowtime/reduction.hpp"
#include "flowtime/threepartition.hpp"

namespace flowtime {

/// Time window [start, end) on a bank of identical machines.
struct Window {
    Time start = 0;
    Time end = 0;
    std::int64_t machines = 1;

    Time length() const { return end - start; }
};

/// Wrap-around packing: in the given job order, fill machine 1 left to
/// right, then machine 2, and so on; a job crossing the window end is
/// split, the remainder wrapping to the next machine. Each job ends up in
/// at most two intervals. Requires sum p <= machines * window length
/// (else Errc::capacity) and max p <= window length (else Errc::too_long).
Schedule mcnaughton_pack(const std::vector<std::pair<JobId, Time>>& jobs,
                         const Window& window);

/// Single-machine SRPT: at every integer slot run the released unfinished
/// job with the smallest remaining processing time, ties by smaller id.
/// Optimal for total completion time on one machine.
Schedule srpt_single_machine(const Instance& instance);

/// The fixed 3-Partition instance (n=2, x=(7,8,8,9,9,13), y=27) that has
/// no solution, its refuted-reduction image, and a schedule that
/// nevertheless beats the threshold D: x-jobs wrap-packed into [0, 27A],
/// B-jobs at 27A, unit jobs from 27A+B.
struct CounterexampleArtifacts {
    ThreePartitionInstance tp;
    Instance instance;
    FaultyReductionParams params;
    Schedule schedule;
};

CounterexampleArtifacts build_counterexample_schedule();

/// Corrected-reduction instance together with the schedule of total delay
/// exactly opt built from a 3-Partition solution: S- and C-jobs at
/// release, X_i without preemption at offset (k-1)Lx_i in block i on its
/// partition machine k, F_k filling machine k up to T.
/// Throws Errc::bad_partition when `partition` is not a solution.
struct IdealArtifacts {
    Instance instance;
    ReductionParams params;
    Schedule schedule;
};

IdealArtifacts build_ideal_schedule(const ThreePartitionInstance& tp,
                                    const Partition& partition);

} // namespace flowtime

#endif
