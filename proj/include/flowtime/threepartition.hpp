#ifndef FLOWTIME_THREEPARTITION_HPP
#define FLOWTIME_THREEPARTITION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "flowtime/model.hpp"

namespace flowtime {

/// 3-Partition instance: 3n positive integers x_1..x_3n and a target y
/// with sum(x) = n*y and y/4 < x_i < y/2 for every i.
struct ThreePartitionInstance {
    std::int64_t n = 0;
    std::vector<std::int64_t> xs;
    std::int64_t y = 0;

    bool operator==(const ThreePartitionInstance&) const = default;
};

/// A partition of {1..3n} into n index triples (1-based indices).
using Partition = std::vector<std::vector<std::int64_t>>;

/// Report-style check of all instance invariants.
ValidationReport validate_3partition(const ThreePartitionInstance& tp);

/// Exhaustive search over triple groupings; nullopt when no triple
/// partition with part sums y exists. Desk scale only: throws
/// Errc::too_large for 3n > 15 and Errc::invalid_instance on invalid
/// input.
std::optional<Partition>
solve_3partition_bruteforce(const ThreePartitionInstance& tp);

/// True iff `partition` splits {1..3n} into disjoint triples covering all
/// indices with every part summing to y.
bool is_partition_solution(const ThreePartitionInstance& tp,
                           const Partition& partition);

} // namespace flowtime

#endif
