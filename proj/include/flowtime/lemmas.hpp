#ifndef FLOWTIME_LEMMAS_HPP
#define FLOWTIME_LEMMAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowtime/model.hpp"
#include "flowtime/reduction.hpp"
#include "flowtime/threepartition.hpp"

namespace flowtime {

/// Outcome of one structural check, with a witness when it fails.
struct LemmaReport {
    enum class Status { pass, fail, not_applicable };

    std::string name;
    Status status = Status::pass;

    struct Witness {
        std::optional<std::int64_t> machine;
        std::optional<std::int64_t> block;
        std::optional<Time> time;
        std::optional<JobId> job;
        std::string note;
    };
    std::optional<Witness> witness;

    bool passed() const { return status != Status::fail; }
};

const char* to_string(LemmaReport::Status status);

/// Every S- and X-job completes strictly before the end of its block,
/// every F-job no later than T.
LemmaReport check_block_completion(const Instance& instance,
                                   const ReductionParams& params,
                                   const Schedule& schedule);

/// Every machine runs some unit in every slot of [0, T).
LemmaReport check_no_idle(const Instance& instance,
                          const ReductionParams& params,
                          const Schedule& schedule);

/// Every F-job completes exactly at T.
LemmaReport check_f_completion(const Instance& instance,
                               const ReductionParams& params,
                               const Schedule& schedule);

/// Within each block the per-slot S-unit counts are non-increasing.
LemmaReport check_staircase(const Instance& instance,
                            const ReductionParams& params,
                            const Schedule& schedule);

/// Per machine and block, the executed S/X/F units appear in the order
/// S* X* F* (units of other kinds are ignored).
LemmaReport check_job_order(const Instance& instance,
                            const ReductionParams& params,
                            const Schedule& schedule);

/// Excess / deficiency of S-units per machine and block against the
/// ideal count (k-1)*L*x_i. Machine attribution is taken as given, so
/// normalize_vertical the schedule first for canonical results.
struct ExcessMatrix {
    std::int64_t machines = 0;
    std::int64_t blocks = 0;
    std::vector<std::int64_t> excess;     // machines x blocks
    std::vector<std::int64_t> deficiency; // machines x blocks

    std::int64_t& e(std::int64_t k, std::int64_t i) {
        return excess[(k - 1) * blocks + (i - 1)];
    }
    std::int64_t e(std::int64_t k, std::int64_t i) const {
        return excess[(k - 1) * blocks + (i - 1)];
    }
    std::int64_t& def(std::int64_t k, std::int64_t i) {
        return deficiency[(k - 1) * blocks + (i - 1)];
    }
    std::int64_t def(std::int64_t k, std::int64_t i) const {
        return deficiency[(k - 1) * blocks + (i - 1)];
    }

    std::int64_t total_excess() const;
    std::int64_t total_deficiency() const;
    std::int64_t block_excess(std::int64_t i) const;
    std::int64_t block_deficiency(std::int64_t i) const;
};

ExcessMatrix compute_excess(const Instance& instance,
                            const ReductionParams& params,
                            const Schedule& schedule);

/// Backlog series z(t) = S-jobs released at times 0..t minus S-units
/// scheduled at times 0..t, plus the marker times
/// t_k^i = B_i + (k-1)*L*x_i. The sum of z equals the total S-delay on
/// every feasible schedule.
struct ZSeries {
    std::vector<std::int64_t> values;
    std::int64_t total = 0;
    /// marker_times[k-1][i-1] = B_i + (k-1)*L*x_i
    std::vector<std::vector<Time>> marker_times;
};

ZSeries compute_z_series(const Instance& instance,
                         const ReductionParams& params,
                         const Schedule& schedule);

/// sum_i sum_k L*x_i * E_k^i, a lower bound on the S-delay of schedules
/// with the staircase structure.
std::int64_t delay_s_lower_bound(const Instance& instance,
                                 const ReductionParams& params,
                                 const Schedule& schedule);

/// P_k = indices of X-jobs whose completion slot lies on machine k,
/// whether or not they ran entirely there. Throws Errc::incomplete when
/// an X-job has no intervals.
Partition extract_partition(const Instance& instance,
                            const ReductionParams& params,
                            const Schedule& schedule);

/// Delay-budget check. Applicable when the schedule is feasible, its
/// total delay is at most opt, C-jobs run at release, and the F-delay
/// equals nyL*n(n-1)/2 + lambda*n*y. Then verifies
///   delay_S + delay_X <= yL*n(n-1)/2
/// and the partition-based strict bound
///   delay_X > sum_k (k-1)*L*sum_{i in P_k} x_i - total deficiency
///             - n*lambda*y.
/// Reports not_applicable (never fail) when the hypotheses are absent.
LemmaReport check_budget(const Instance& instance,
                         const ReductionParams& params,
                         const Schedule& schedule);

/// The five structural checks plus the budget check, in a fixed order.
std::vector<LemmaReport> run_all_checks(const Instance& instance,
                                        const ReductionParams& params,
                                        const Schedule& schedule);

} // namespace flowtime

#endif
