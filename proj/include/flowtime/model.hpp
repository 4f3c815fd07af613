#ifndef FLOWTIME_MODEL_HPP
#define FLOWTIME_MODEL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flowtime/checked.hpp"

namespace flowtime {

using Time = std::int64_t;
using JobId = std::int64_t;

/// Job families. S/X/F/C are the four families of the corrected reduction,
/// B and Unit appear in the refuted one, Generic covers everything else.
enum class JobKind { S, X, F, C, B, Unit, Generic };

const char* to_string(JobKind kind);
std::optional<JobKind> kind_from_string(std::string_view name);

/// Canonical vertical position of a kind inside a time slot
/// (F first, then X, then S, then C; remaining kinds after).
int vertical_rank(JobKind kind);

struct Job {
    JobId id = 0;
    Time release = 0; // r_j >= 0
    Time ptime = 0;   // p_j >= 1
    JobKind kind = JobKind::Generic;

    bool operator==(const Job&) const = default;
};

/// Run-length record for a batch of identical unit-ish jobs.
/// The record stands for `count` jobs with ids base_id..base_id+count-1.
/// Releases sweep `span` consecutive integer times starting at `release`,
/// count/span jobs per time (span == 1 means all share one release).
struct JobGroup {
    JobId base_id = 0;
    std::int64_t count = 0;
    Time release = 0;
    Time ptime = 1;
    JobKind kind = JobKind::Generic;
    std::int64_t span = 1;

    bool operator==(const JobGroup&) const = default;

    std::int64_t per_release() const { return count / span; }
};

/// Expanded job list plus an id lookup, built once per instance.
struct JobTable {
    std::vector<Job> jobs;
    std::unordered_map<JobId, std::size_t> index_by_id;

    const Job* find(JobId id) const {
        auto it = index_by_id.find(id);
        return it == index_by_id.end() ? nullptr : &jobs[it->second];
    }
};

/// Immutable problem instance: m identical machines plus a job multiset,
/// stored as explicit jobs and grouped run-length records. Groups are
/// only expanded on demand; instances stay cheap to build and serialize
/// even when a reduction emits hundreds of thousands of unit jobs.
class Instance {
public:
    Instance() = default;
    Instance(std::int64_t machines, std::vector<Job> jobs,
             std::vector<JobGroup> groups = {});

    Instance(const Instance& other);
    Instance& operator=(const Instance& other);
    Instance(Instance&& other) noexcept;
    Instance& operator=(Instance&& other) noexcept;

    std::int64_t machines() const { return machines_; }
    const std::vector<Job>& explicit_jobs() const { return explicit_; }
    const std::vector<JobGroup>& groups() const { return groups_; }

    /// Number of jobs including group members, without expanding.
    std::int64_t job_count() const;

    /// Expanded view (explicit jobs first, then groups in listed order).
    /// Lazily built, cached, safe to call from several threads.
    const JobTable& table() const;
    const std::vector<Job>& jobs() const { return table().jobs; }
    const Job* find(JobId id) const { return table().find(id); }

    bool operator==(const Instance& other) const;

private:
    void check_invariants() const;

    std::int64_t machines_ = 1;
    std::vector<Job> explicit_;
    std::vector<JobGroup> groups_;

    mutable std::mutex table_mutex_;
    mutable std::shared_ptr<const JobTable> table_;
};

/// One execution interval of a job on a machine; [start, end) in integer
/// slots, machines 1-indexed.
struct ExecInterval {
    JobId job = 0;
    std::int64_t machine = 1;
    Time start = 0;
    Time end = 0;

    bool operator==(const ExecInterval&) const = default;
};

/// A (possibly partial) preemptive schedule: a bag of execution intervals.
struct Schedule {
    std::vector<ExecInterval> intervals;

    bool operator==(const Schedule&) const = default;
};

enum class ViolationCode {
    MACHINE_OVERLAP,
    JOB_OVERLAP,
    RELEASE_VIOLATION,
    WRONG_TOTAL_WORK,
    UNKNOWN_JOB,
    BAD_MACHINE,
    BAD_INTERVAL,
    // 3-Partition instance checks share the report vocabulary.
    BAD_COUNT,
    NONPOSITIVE_VALUE,
    SUM_MISMATCH,
    VALUE_OUT_OF_RANGE
};

const char* to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::optional<JobId> job;
    std::optional<std::int64_t> machine;
    std::optional<Time> time;
    std::string note;
};

struct ValidationReport {
    bool feasible = true;
    std::vector<Violation> violations;

    void add(Violation v) {
        feasible = false;
        violations.push_back(std::move(v));
    }
};

struct ObjectiveBreakdown {
    std::int64_t total_completion = 0;          // sum of C_j
    std::int64_t total_delay = 0;               // sum of C_j - r_j - p_j
    std::map<JobKind, std::int64_t> delay_by_kind;
};

/// Checks every feasibility clause and reports each violation with a
/// witness. feasible == true iff the schedule is a complete feasible
/// schedule of the instance.
ValidationReport validate_schedule(const Instance& instance,
                                   const Schedule& schedule);

/// Right endpoint of the job's last execution interval.
/// Throws Errc::unknown_job when the job has no intervals.
Time completion_time(const Schedule& schedule, JobId job);

/// Exact objective values for a feasible complete schedule.
/// Throws Errc::infeasible when validation fails, Errc::overflow when a
/// sum leaves the signed 64-bit range.
ObjectiveBreakdown evaluate(const Instance& instance,
                            const Schedule& schedule);

/// Strict dominance between two feasible schedules of one instance:
/// lexicographically earlier per-slot S-unit profile, or equal S-profiles
/// and a lexicographically earlier X-unit profile.
bool dominates(const Schedule& s1, const Schedule& s2,
               const Instance& instance);

/// Reassigns the units of every time slot to machines 1..c in the
/// canonical vertical order (F-jobs, X-jobs, S-jobs, C-jobs; ties by id).
/// Keeps the per-slot unit multisets, hence all objective values.
Schedule normalize_vertical(const Instance& instance,
                            const Schedule& schedule);

/// Per-slot count of executing units of one kind over [0, horizon).
std::vector<std::int64_t> kind_slot_counts(const Instance& instance,
                                           const Schedule& schedule,
                                           JobKind kind, Time horizon);

/// Largest interval endpoint in the schedule (0 when empty).
Time schedule_horizon(const Schedule& schedule);

} // namespace flowtime

#endif
