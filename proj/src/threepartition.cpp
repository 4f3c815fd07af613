#include "flowtime/threepartition.hpp"

#include <algorithm>
#include <string>

namespace flowtime {

ValidationReport validate_3partition(const ThreePartitionInstance& tp) {
    ValidationReport report;
    if (tp.n < 1)
        report.add({ViolationCode::BAD_COUNT, std::nullopt, std::nullopt,
                    std::nullopt, "n must be >= 1"});
    if (tp.y < 1)
        report.add({ViolationCode::NONPOSITIVE_VALUE, std::nullopt,
                    std::nullopt, std::nullopt, "y must be >= 1"});
    if (static_cast<std::int64_t>(tp.xs.size()) != 3 * tp.n) {
        report.add({ViolationCode::BAD_COUNT, std::nullopt, std::nullopt,
                    std::nullopt,
                    "expected 3n = " + std::to_string(3 * tp.n) +
                        " values, got " + std::to_string(tp.xs.size())});
        return report;
    }
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < tp.xs.size(); ++i) {
        const std::int64_t x = tp.xs[i];
        if (x < 1) {
            report.add({ViolationCode::NONPOSITIVE_VALUE,
                        static_cast<std::int64_t>(i + 1), std::nullopt,
                        std::nullopt, "x must be >= 1"});
            continue;
        }
        // strict rational comparisons: y/4 < x < y/2
        if (!(4 * x > tp.y && 2 * x < tp.y))
            report.add({ViolationCode::VALUE_OUT_OF_RANGE,
                        static_cast<std::int64_t>(i + 1), std::nullopt,
                        std::nullopt,
                        "x_" + std::to_string(i + 1) + " = " +
                            std::to_string(x) +
                            " violates y/4 < x < y/2 for y = " +
                            std::to_string(tp.y)});
        sum = checked_add(sum, x);
    }
    const std::int64_t target = checked_mul(tp.n, tp.y);
    if (sum != target)
        report.add({ViolationCode::SUM_MISMATCH, std::nullopt, std::nullopt,
                    std::nullopt,
                    "sum of x = " + std::to_string(sum) + " != n*y = " +
                        std::to_string(target)});
    return report;
}

namespace {

bool search_triples(const ThreePartitionInstance& tp,
                    std::vector<bool>& used, std::int64_t remaining,
                    Partition& out) {
    if (remaining == 0)
        return true;
    // lowest unused index anchors the next triple; avoids permuted dups
    std::size_t first = 0;
    while (first < used.size() && used[first])
        ++first;
    used[first] = true;
    for (std::size_t a = first + 1; a < used.size(); ++a) {
        if (used[a])
            continue;
        used[a] = true;
        for (std::size_t b = a + 1; b < used.size(); ++b) {
            if (used[b])
                continue;
            if (tp.xs[first] + tp.xs[a] + tp.xs[b] != tp.y)
                continue;
            used[b] = true;
            out.push_back({static_cast<std::int64_t>(first + 1),
                           static_cast<std::int64_t>(a + 1),
                           static_cast<std::int64_t>(b + 1)});
            if (search_triples(tp, used, remaining - 1, out))
                return true;
            out.pop_back();
            used[b] = false;
        }
        used[a] = false;
    }
    used[first] = false;
    return false;
}

} // namespace

std::optional<Partition>
solve_3partition_bruteforce(const ThreePartitionInstance& tp) {
    ValidationReport report = validate_3partition(tp);
    if (!report.feasible)
        throw Error(Errc::invalid_instance,
                    "invalid 3-Partition instance: " +
                        report.violations.front().note);
    if (3 * tp.n > 15)
        throw Error(Errc::too_large,
                    "brute-force solver handles at most 15 numbers");
    std::vector<bool> used(tp.xs.size(), false);
    Partition out;
    if (search_triples(tp, used, tp.n, out))
        return out;
    return std::nullopt;
}

bool is_partition_solution(const ThreePartitionInstance& tp,
                           const Partition& partition) {
    if (static_cast<std::int64_t>(partition.size()) != tp.n)
        return false;
    std::vector<bool> seen(tp.xs.size(), false);
    for (const auto& part : partition) {
        if (part.size() != 3)
            return false;
        std::int64_t sum = 0;
        for (std::int64_t index : part) {
            if (index < 1 || index > static_cast<std::int64_t>(tp.xs.size()))
                return false;
            if (seen[static_cast<std::size_t>(index - 1)])
                return false;
            seen[static_cast<std::size_t>(index - 1)] = true;
            sum += tp.xs[static_cast<std::size_t>(index - 1)];
        }
        if (sum != tp.y)
            return false;
    }
    return std::find(seen.begin(), seen.end(), false) == seen.end();
}

} // namespace flowtime
