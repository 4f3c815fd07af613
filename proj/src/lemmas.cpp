#include "flowtime/lemmas.hpp"

#include <algorithm>
#include <string>

#include "flowtime/grid.hpp"

namespace flowtime {

const char* to_string(LemmaReport::Status status) {
    switch (status) {
    case LemmaReport::Status::pass: return "PASS";
    case LemmaReport::Status::fail: return "FAIL";
    case LemmaReport::Status::not_applicable: return "NOT_APPLICABLE";
    }
    return "?";
}

std::int64_t ExcessMatrix::total_excess() const {
    std::int64_t sum = 0;
    for (std::int64_t v : excess)
        sum = checked_add(sum, v);
    return sum;
}

std::int64_t ExcessMatrix::total_deficiency() const {
    std::int64_t sum = 0;
    for (std::int64_t v : deficiency)
        sum = checked_add(sum, v);
    return sum;
}

std::int64_t ExcessMatrix::block_excess(std::int64_t i) const {
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k <= machines; ++k)
        sum = checked_add(sum, e(k, i));
    return sum;
}

std::int64_t ExcessMatrix::block_deficiency(std::int64_t i) const {
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k <= machines; ++k)
        sum = checked_add(sum, def(k, i));
    return sum;
}

namespace {

LemmaReport pass_report(std::string name) {
    return LemmaReport{std::move(name), LemmaReport::Status::pass,
                       std::nullopt};
}

LemmaReport fail_report(std::string name, LemmaReport::Witness witness) {
    return LemmaReport{std::move(name), LemmaReport::Status::fail,
                       std::move(witness)};
}

LemmaReport na_report(std::string name, std::string note) {
    LemmaReport report{std::move(name),
                       LemmaReport::Status::not_applicable, std::nullopt};
    report.witness = LemmaReport::Witness{};
    report.witness->note = std::move(note);
    return report;
}

// completion time of every job that has at least one interval
std::unordered_map<JobId, Time> completions(const Schedule& schedule) {
    std::unordered_map<JobId, Time> out;
    for (const ExecInterval& iv : schedule.intervals) {
        auto [it, inserted] = out.emplace(iv.job, iv.end);
        if (!inserted)
            it->second = std::max(it->second, iv.end);
    }
    return out;
}

} // namespace

LemmaReport check_block_completion(const Instance& instance,
                                   const ReductionParams& params,
                                   const Schedule& schedule) {
    const char* name = "block_completion";
    const auto done = completions(schedule);
    for (const Job& job : instance.jobs()) {
        auto it = done.find(job.id);
        if (it == done.end())
            continue; // never scheduled; other checks notice the hole
        const Time c = it->second;
        if (job.kind == JobKind::S || job.kind == JobKind::X) {
            const std::int64_t block = params.block_of(job.release);
            if (block == 0)
                continue;
            if (c >= params.block_end(block))
                return fail_report(
                    name, {std::nullopt, block, c, job.id,
                           "completes at " + std::to_string(c) +
                               ", not strictly before the block end " +
                               std::to_string(params.block_end(block))});
        } else if (job.kind == JobKind::F) {
            if (c > params.T)
                return fail_report(name,
                                   {std::nullopt, std::nullopt, c, job.id,
                                    "F-job completes after T"});
        }
    }
    return pass_report(name);
}

LemmaReport check_no_idle(const Instance& instance,
                          const ReductionParams& params,
                          const Schedule& schedule) {
    const char* name = "no_idle";
    const Time horizon =
        std::max(schedule_horizon(schedule), params.T);
    const SlotGrid grid =
        SlotGrid::from(schedule, instance.machines(), horizon);
    for (Time t = 0; t < params.T; ++t)
        for (std::int64_t m = 1; m <= grid.machines; ++m)
            if (grid.at(m, t) == SlotGrid::kIdle)
                return fail_report(name, {m, params.block_of(t), t,
                                          std::nullopt, "idle unit slot"});
    return pass_report(name);
}

LemmaReport check_f_completion(const Instance& instance,
                               const ReductionParams& params,
                               const Schedule& schedule) {
    const char* name = "f_completion";
    const auto done = completions(schedule);
    for (const Job& job : instance.jobs()) {
        if (job.kind != JobKind::F)
            continue;
        auto it = done.find(job.id);
        if (it == done.end())
            return fail_report(name, {std::nullopt, std::nullopt,
                                      std::nullopt, job.id,
                                      "F-job never scheduled"});
        if (it->second != params.T)
            return fail_report(
                name, {std::nullopt, std::nullopt, it->second, job.id,
                       "completes at " + std::to_string(it->second) +
                           " instead of T = " + std::to_string(params.T)});
    }
    return pass_report(name);
}

LemmaReport check_staircase(const Instance& instance,
                            const ReductionParams& params,
                            const Schedule& schedule) {
    const char* name = "staircase";
    const Time horizon =
        std::max(schedule_horizon(schedule), params.T);
    const auto s_counts =
        kind_slot_counts(instance, schedule, JobKind::S, horizon);
    for (std::int64_t i = 1; i <= params.block_count(); ++i) {
        const Time lo = params.block_start(i);
        const Time hi = std::min<Time>(params.block_end(i), horizon);
        for (Time t = lo + 1; t < hi; ++t)
            if (s_counts[static_cast<std::size_t>(t)] >
                s_counts[static_cast<std::size_t>(t - 1)])
                return fail_report(
                    name,
                    {std::nullopt, i, t, std::nullopt,
                     "S-count rises from " +
                         std::to_string(
                             s_counts[static_cast<std::size_t>(t - 1)]) +
                         " to " +
                         std::to_string(
                             s_counts[static_cast<std::size_t>(t)])});
    }
    return pass_report(name);
}

LemmaReport check_job_order(const Instance& instance,
                            const ReductionParams& params,
                            const Schedule& schedule) {
    const char* name = "job_order";
    const Time horizon =
        std::max(schedule_horizon(schedule), params.T);
    const SlotGrid grid =
        SlotGrid::from(schedule, instance.machines(), horizon);
    const JobTable& table = instance.table();

    auto order_rank = [](JobKind kind) -> int {
        switch (kind) {
        case JobKind::S: return 0;
        case JobKind::X: return 1;
        case JobKind::F: return 2;
        default: return -1; // other kinds are not constrained
        }
    };

    for (std::int64_t m = 1; m <= grid.machines; ++m) {
        for (std::int64_t i = 1; i <= params.block_count(); ++i) {
            const Time lo = params.block_start(i);
            const Time hi = std::min<Time>(params.block_end(i), horizon);
            int last_rank = 0;
            for (Time t = lo; t < hi; ++t) {
                const JobId id = grid.at(m, t);
                if (id == SlotGrid::kIdle)
                    continue;
                const Job* job = table.find(id);
                if (!job)
                    continue;
                const int rank = order_rank(job->kind);
                if (rank < 0)
                    continue;
                if (rank < last_rank)
                    return fail_report(
                        name, {m, i, t, id,
                               std::string(to_string(job->kind)) +
                                   "-unit after a later family"});
                last_rank = rank;
            }
        }
    }
    return pass_report(name);
}

ExcessMatrix compute_excess(const Instance& instance,
                            const ReductionParams& params,
                            const Schedule& schedule) {
    const ReductionShape shape = derive_shape(instance, params);
    const Time horizon =
        std::max(schedule_horizon(schedule), params.T);
    const SlotGrid grid =
        SlotGrid::from(schedule, instance.machines(), horizon);
    const JobTable& table = instance.table();

    ExcessMatrix matrix;
    matrix.machines = instance.machines();
    matrix.blocks = params.block_count();
    matrix.excess.assign(
        static_cast<std::size_t>(matrix.machines * matrix.blocks), 0);
    matrix.deficiency.assign(
        static_cast<std::size_t>(matrix.machines * matrix.blocks), 0);

    for (std::int64_t k = 1; k <= matrix.machines; ++k) {
        for (std::int64_t i = 1; i <= matrix.blocks; ++i) {
            const Time lo = params.block_start(i);
            const Time hi = std::min<Time>(params.block_end(i), horizon);
            std::int64_t count = 0;
            for (Time t = lo; t < hi; ++t) {
                const JobId id = grid.at(k, t);
                if (id == SlotGrid::kIdle)
                    continue;
                const Job* job = table.find(id);
                if (job && job->kind == JobKind::S)
                    ++count;
            }
            const std::int64_t ideal =
                checked_mul(k - 1,
                            shape.lxs[static_cast<std::size_t>(i - 1)]);
            matrix.e(k, i) = std::max<std::int64_t>(count - ideal, 0);
            matrix.def(k, i) = std::max<std::int64_t>(ideal - count, 0);
        }
    }
    return matrix;
}

ZSeries compute_z_series(const Instance& instance,
                         const ReductionParams& params,
                         const Schedule& schedule) {
    const ReductionShape shape = derive_shape(instance, params);
    Time last_release = 0;
    for (const Job& job : instance.jobs())
        if (job.kind == JobKind::S)
            last_release = std::max(last_release, job.release);
    const Time horizon = std::max(
        {schedule_horizon(schedule), params.T, last_release + 1});

    std::vector<std::int64_t> released(static_cast<std::size_t>(horizon), 0);
    for (const Job& job : instance.jobs())
        if (job.kind == JobKind::S)
            ++released[static_cast<std::size_t>(job.release)];
    const auto scheduled =
        kind_slot_counts(instance, schedule, JobKind::S, horizon);

    ZSeries series;
    series.values.resize(static_cast<std::size_t>(horizon));
    std::int64_t z = 0;
    for (Time t = 0; t < horizon; ++t) {
        z += released[static_cast<std::size_t>(t)] -
             scheduled[static_cast<std::size_t>(t)];
        series.values[static_cast<std::size_t>(t)] = z;
        series.total = checked_add(series.total, z);
    }

    series.marker_times.resize(static_cast<std::size_t>(shape.n));
    for (std::int64_t k = 1; k <= shape.n; ++k) {
        auto& row = series.marker_times[static_cast<std::size_t>(k - 1)];
        row.reserve(static_cast<std::size_t>(params.block_count()));
        for (std::int64_t i = 1; i <= params.block_count(); ++i)
            row.push_back(checked_add(
                params.block_start(i),
                checked_mul(k - 1,
                            shape.lxs[static_cast<std::size_t>(i - 1)])));
    }
    return series;
}

std::int64_t delay_s_lower_bound(const Instance& instance,
                                 const ReductionParams& params,
                                 const Schedule& schedule) {
    const ReductionShape shape = derive_shape(instance, params);
    const ExcessMatrix matrix = compute_excess(instance, params, schedule);
    std::int64_t bound = 0;
    for (std::int64_t k = 1; k <= matrix.machines; ++k)
        for (std::int64_t i = 1; i <= matrix.blocks; ++i)
            bound = checked_add(
                bound,
                checked_mul(shape.lxs[static_cast<std::size_t>(i - 1)],
                            matrix.e(k, i)));
    return bound;
}

Partition extract_partition(const Instance& instance,
                            const ReductionParams& params,
                            const Schedule& schedule) {
    Partition partition(static_cast<std::size_t>(instance.machines()));
    for (const Job& job : instance.jobs()) {
        if (job.kind != JobKind::X)
            continue;
        const std::int64_t block = params.block_of(job.release);
        if (block == 0)
            throw Error(Errc::invalid_instance,
                        "X-job released outside every block");
        // machine of the interval with the largest right endpoint
        const ExecInterval* last = nullptr;
        for (const ExecInterval& iv : schedule.intervals)
            if (iv.job == job.id && (!last || iv.end > last->end))
                last = &iv;
        if (!last)
            throw Error(Errc::incomplete,
                        "X-job " + std::to_string(job.id) +
                            " has no intervals");
        partition[static_cast<std::size_t>(last->machine - 1)].push_back(
            block);
    }
    for (auto& part : partition)
        std::sort(part.begin(), part.end());
    return partition;
}

LemmaReport check_budget(const Instance& instance,
                         const ReductionParams& params,
                         const Schedule& schedule) {
    const char* name = "budget";
    const ReductionShape shape = derive_shape(instance, params);

    if (!validate_schedule(instance, schedule).feasible)
        return na_report(name, "schedule is not feasible and complete");
    const ObjectiveBreakdown breakdown = evaluate(instance, schedule);

    auto kind_delay = [&](JobKind kind) {
        auto it = breakdown.delay_by_kind.find(kind);
        return it == breakdown.delay_by_kind.end() ? 0 : it->second;
    };

    const std::int64_t n = shape.n;
    const std::int64_t pairs = n * (n - 1) / 2;
    const std::int64_t f_target = checked_add(
        checked_mul(checked_mul(n, shape.y), checked_mul(params.L, pairs)),
        checked_mul(params.lambda, checked_mul(n, shape.y)));

    if (breakdown.total_delay > params.opt)
        return na_report(name, "total delay " +
                                   std::to_string(breakdown.total_delay) +
                                   " exceeds opt");
    if (kind_delay(JobKind::C) != 0)
        return na_report(name, "C-jobs do not run at their release times");
    if (kind_delay(JobKind::F) != f_target)
        return na_report(
            name, "F-delay " + std::to_string(kind_delay(JobKind::F)) +
                      " != " + std::to_string(f_target));

    const std::int64_t delay_s = kind_delay(JobKind::S);
    const std::int64_t delay_x = kind_delay(JobKind::X);
    const std::int64_t residual_budget =
        checked_mul(checked_mul(shape.y, params.L), pairs);

    const Partition partition =
        extract_partition(instance, params, schedule);
    const ExcessMatrix matrix = compute_excess(instance, params, schedule);
    std::int64_t weighted = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        std::int64_t part_sum = 0;
        for (std::int64_t i : partition[static_cast<std::size_t>(k - 1)])
            part_sum = checked_add(
                part_sum, shape.xs[static_cast<std::size_t>(i - 1)]);
        weighted = checked_add(
            weighted,
            checked_mul(checked_mul(k - 1, params.L), part_sum));
    }
    const std::int64_t x_bound = checked_sub(
        checked_sub(weighted, matrix.total_deficiency()),
        checked_mul(n, checked_mul(params.lambda, shape.y)));

    const bool eq1 =
        checked_add(delay_s, delay_x) <= residual_budget;
    const bool eq2 = delay_x > x_bound;

    LemmaReport::Witness witness;
    witness.note = "delay_S+delay_X = " +
                   std::to_string(delay_s + delay_x) + " vs budget " +
                   std::to_string(residual_budget) + "; delay_X = " +
                   std::to_string(delay_x) + " vs bound " +
                   std::to_string(x_bound);
    if (eq1 && eq2) {
        LemmaReport report = pass_report(name);
        report.witness = std::move(witness);
        return report;
    }
    return fail_report(name, std::move(witness));
}

std::vector<LemmaReport> run_all_checks(const Instance& instance,
                                        const ReductionParams& params,
                                        const Schedule& schedule) {
    std::vector<LemmaReport> reports;
    reports.push_back(check_block_completion(instance, params, schedule));
    reports.push_back(check_no_idle(instance, params, schedule));
    reports.push_back(check_f_completion(instance, params, schedule));
    reports.push_back(check_staircase(instance, params, schedule));
    reports.push_back(check_job_order(instance, params, schedule));
    reports.push_back(check_budget(instance, params, schedule));
    return reports;
}

} // namespace flowtime
