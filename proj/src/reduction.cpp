#include "flowtime/reduction.hpp"

#include <algorithm>
#include <string>

namespace flowtime {

namespace {

void require_valid(const ThreePartitionInstance& tp) {
    ValidationReport report = validate_3partition(tp);
    if (!report.feasible)
        throw Error(Errc::invalid_instance,
                    "invalid 3-Partition instance: " +
                        report.violations.front().note);
}

// Emit batches of > 16 identical unit jobs as grouped records; anything
// smaller goes out as explicit jobs.
constexpr std::int64_t kGroupThreshold = 16;

void emit_unit_batch(std::vector<Job>& jobs, std::vector<JobGroup>& groups,
                     JobId& next_id, std::int64_t count, Time release,
                     JobKind kind, std::int64_t span) {
    if (count > kGroupThreshold) {
        groups.push_back({next_id, count, release, 1, kind, span});
        next_id = checked_add(next_id, count);
        return;
    }
    const std::int64_t per_release = count / span;
    for (std::int64_t s = 0; s < span; ++s)
        for (std::int64_t c = 0; c < per_release; ++c)
            jobs.push_back(Job{next_id++, release + s, 1, kind});
}

} // namespace

std::int64_t ReductionParams::block_of(Time t) const {
    if (t < 0 || t >= T)
        return 0;
    auto it = std::upper_bound(block_starts.begin(), block_starts.end(), t);
    return static_cast<std::int64_t>(it - block_starts.begin());
}

FaultyReductionParams
compute_faulty_params(const ThreePartitionInstance& tp) {
    const std::int64_t n = tp.n;
    const std::int64_t y = tp.y;
    FaultyReductionParams p;
    p.A = checked_mul(6, checked_mul(n, y));
    p.B = checked_mul(18, checked_mul(checked_mul(n, n), checked_mul(y, y)));
    // D = 3nAy + n(Ay+B) + n*sum_{i=1..A}(Ay+B+i)
    const std::int64_t ay = checked_mul(p.A, y);
    const std::int64_t ay_b = checked_add(ay, p.B);
    const std::int64_t tail_sum = checked_add(
        checked_mul(p.A, ay_b),
        checked_mul(p.A, checked_add(p.A, 1)) / 2);
    p.D = checked_add(
        checked_add(checked_mul(3, checked_mul(n, ay)), checked_mul(n, ay_b)),
        checked_mul(n, tail_sum));
    return p;
}

ReductionParams compute_reduction_params(const ThreePartitionInstance& tp) {
    const std::int64_t n = tp.n;
    const std::int64_t y = tp.y;
    ReductionParams p;
    p.lambda = checked_mul(2, checked_mul(n, n - 1));
    p.L = checked_add(checked_mul(n, checked_mul(p.lambda, y)), p.lambda);
    const std::int64_t pairs = checked_mul(n, n - 1) / 2; // n(n-1)/2
    const std::int64_t yl = checked_mul(y, p.L);
    p.opt = checked_add(
        checked_add(checked_mul(yl, pairs),
                    checked_mul(checked_mul(n, yl), pairs)),
        checked_mul(n, checked_mul(p.lambda, y)));
    p.T = checked_add(checked_mul(checked_mul(n, n), yl),
                      checked_mul(checked_mul(3, n), p.opt));
    p.block_starts.reserve(static_cast<std::size_t>(3 * n) + 1);
    Time b = 0;
    p.block_starts.push_back(b);
    for (std::int64_t i = 0; i < 3 * n; ++i) {
        b = checked_add(
            b, checked_add(checked_mul(n, checked_mul(p.L, tp.xs[i])), p.opt));
        p.block_starts.push_back(b);
    }
    if (p.block_starts.back() != p.T)
        throw Error(Errc::invalid_instance,
                    "block boundaries do not close at T");
    return p;
}

std::pair<Instance, FaultyReductionParams>
faulty_reduce(const ThreePartitionInstance& tp) {
    require_valid(tp);
    const FaultyReductionParams params = compute_faulty_params(tp);
    const std::int64_t n = tp.n;

    std::vector<Job> jobs;
    std::vector<JobGroup> groups;
    JobId next_id = 1;
    // x-jobs 1..3n
    for (std::int64_t i = 0; i < 3 * n; ++i)
        jobs.push_back(
            Job{next_id++, 0, checked_mul(params.A, tp.xs[i]), JobKind::X});
    // B-jobs 3n+1..4n
    const Time ay = checked_mul(params.A, tp.y);
    for (std::int64_t k = 0; k < n; ++k)
        jobs.push_back(Job{next_id++, ay, params.B, JobKind::B});
    // A*n unit jobs, all released at Ay+B
    emit_unit_batch(jobs, groups, next_id, checked_mul(params.A, n),
                    checked_add(ay, params.B), JobKind::Unit, 1);

    return {Instance(n, std::move(jobs), std::move(groups)), params};
}

std::pair<Instance, ReductionParams>
corrected_reduce(const ThreePartitionInstance& tp) {
    require_valid(tp);
    if (tp.n < 2)
        throw Error(Errc::invalid_instance,
                    "corrected reduction requires n >= 2");
    const ReductionParams params = compute_reduction_params(tp);
    const std::int64_t n = tp.n;

    std::vector<Job> jobs;
    std::vector<JobGroup> groups;
    JobId next_id = 1;

    // F-jobs 1..n: F_k has length T - (k-1)Lny - lambda*y
    const std::int64_t lny =
        checked_mul(params.L, checked_mul(n, tp.y));
    for (std::int64_t k = 1; k <= n; ++k)
        jobs.push_back(Job{next_id++, 0,
                           checked_sub(checked_sub(params.T,
                                                   checked_mul(k - 1, lny)),
                                       checked_mul(params.lambda, tp.y)),
                           JobKind::F});
    // X-jobs n+1..n+3n: X_i released at B_i with length lambda*x_i
    for (std::int64_t i = 1; i <= 3 * n; ++i)
        jobs.push_back(Job{next_id++, params.block_start(i),
                           checked_mul(params.lambda, tp.xs[i - 1]),
                           JobKind::X});
    // S-jobs: per block i and stair level j, n-j unit jobs at each time
    // of [B_i + (j-1)Lx_i, B_i + jLx_i)
    for (std::int64_t i = 1; i <= 3 * n; ++i) {
        const std::int64_t lx = checked_mul(params.L, tp.xs[i - 1]);
        for (std::int64_t j = 1; j <= n - 1; ++j)
            emit_unit_batch(jobs, groups, next_id,
                            checked_mul(n - j, lx),
                            checked_add(params.block_start(i),
                                        checked_mul(j - 1, lx)),
                            JobKind::S, lx);
    }
    // C-jobs: n unit jobs at each time of the cork block [T, T+opt)
    emit_unit_batch(jobs, groups, next_id, checked_mul(n, params.opt),
                    params.T, JobKind::C, params.opt);

    return {Instance(n, std::move(jobs), std::move(groups)), params};
}

ReductionShape derive_shape(const Instance& instance,
                            const ReductionParams& params) {
    ReductionShape shape;
    shape.n = instance.machines();
    const std::int64_t blocks = params.block_count();
    shape.xs.reserve(static_cast<std::size_t>(blocks));
    shape.lxs.reserve(static_cast<std::size_t>(blocks));
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= blocks; ++i) {
        const std::int64_t lx = params.lx(i, shape.n);
        if (lx <= 0 || params.L <= 0 || lx % params.L != 0)
            throw Error(Errc::invalid_instance,
                        "block lengths are inconsistent with L");
        shape.lxs.push_back(lx);
        shape.xs.push_back(lx / params.L);
        sum = checked_add(sum, lx / params.L);
    }
    if (shape.n < 1 || sum % shape.n != 0)
        throw Error(Errc::invalid_instance,
                    "x values do not sum to a multiple of n");
    shape.y = sum / shape.n;
    return shape;
}

} // namespace flowtime
