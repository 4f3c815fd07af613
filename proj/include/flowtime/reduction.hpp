#ifndef FLOWTIME_REDUCTION_HPP
#define FLOWTIME_REDUCTION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "flowtime/model.hpp"
#include "flowtime/threepartition.hpp"

namespace flowtime {

/// Parameters of the refuted reduction: A = 6ny, B = 18n^2y^2 and the
/// objective threshold D = 3nAy + n(Ay+B) + n*sum_{i=1..A}(Ay+B+i).
struct FaultyReductionParams {
    std::int64_t A = 0;
    std::int64_t B = 0;
    std::int64_t D = 0;

    bool operator==(const FaultyReductionParams&) const = default;
};

/// Parameters of the corrected reduction.
///   lambda = 2n(n-1)
///   L      = n*lambda*y + lambda
///   opt    = yL*n(n-1)/2 + nyL*n(n-1)/2 + n*lambda*y
///   T      = n^2*yL + 3n*opt
/// block_starts holds B_1..B_{3n+1} with B_1 = 0 and B_{3n+1} = T;
/// block i is [B_i, B_{i+1}) of length n*L*x_i + opt.
struct ReductionParams {
    std::int64_t lambda = 0;
    std::int64_t L = 0;
    std::int64_t opt = 0;
    std::int64_t T = 0;
    std::vector<Time> block_starts;

    bool operator==(const ReductionParams&) const = default;

    std::int64_t block_count() const {
        return static_cast<std::int64_t>(block_starts.size()) - 1;
    }
    Time block_start(std::int64_t i) const { return block_starts[i - 1]; }
    Time block_end(std::int64_t i) const { return block_starts[i]; }
    /// L*x_i recovered from the block length.
    std::int64_t lx(std::int64_t i, std::int64_t machines) const {
        return (block_end(i) - block_start(i) - opt) / machines;
    }
    /// 1-based index of the block containing time t, or 0 if t is outside
    /// [0, T).
    std::int64_t block_of(Time t) const;
};

/// Quantities shared by the lemma predicates, recovered from an instance
/// and its reduction parameters (x_i = lx_i / L, y = sum x / n).
struct ReductionShape {
    std::int64_t n = 0;
    std::int64_t y = 0;
    std::vector<std::int64_t> xs;  // x_1..x_3n
    std::vector<std::int64_t> lxs; // L*x_1..L*x_3n
};

ReductionShape derive_shape(const Instance& instance,
                            const ReductionParams& params);

ReductionParams compute_reduction_params(const ThreePartitionInstance& tp);
FaultyReductionParams
compute_faulty_params(const ThreePartitionInstance& tp);

/// The refuted transformation: n machines, 3n x-jobs (r=0, p=A*x_j),
/// n B-jobs (r=Ay, p=B) and A*n unit jobs (r=Ay+B, p=1), ids 1..4n+An.
/// Accepts n = 1 as well. Throws Errc::invalid_instance / Errc::overflow.
std::pair<Instance, FaultyReductionParams>
faulty_reduce(const ThreePartitionInstance& tp);

/// The corrected transformation: n machines; per block i one X-job
/// (r=B_i, p=lambda*x_i) and staircase unit S-jobs released per
/// n - ceil((t-B_i+1)/(L*x_i)); n filler F-jobs (r=0,
/// p=T-(k-1)Lny-lambda*y); n*opt cork unit C-jobs, n per time in
/// [T, T+opt). S- and C-jobs are emitted as grouped records. Requires a
/// valid instance with n >= 2.
std::pair<Instance, ReductionParams>
corrected_reduce(const ThreePartitionInstance& tp);

} // namespace flowtime

#endif
