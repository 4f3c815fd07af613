#include "flowtime/model.hpp"

#include <algorithm>
#include <array>

namespace flowtime {

const char* to_string(Errc code) {
    switch (code) {
    case Errc::overflow: return "OVERFLOW";
    case Errc::infeasible: return "INFEASIBLE";
    case Errc::too_large: return "TOO_LARGE";
    case Errc::no_schedule: return "NO_SCHEDULE";
    case Errc::capacity: return "CAPACITY";
    case Errc::too_long: return "TOO_LONG";
    case Errc::bad_partition: return "BAD_PARTITION";
    case Errc::invalid_instance: return "INVALID_INSTANCE";
    case Errc::unknown_job: return "UNKNOWN_JOB";
    case Errc::incomplete: return "INCOMPLETE";
    case Errc::parse: return "PARSE";
    }
    return "?";
}

const char* to_string(JobKind kind) {
    switch (kind) {
    case JobKind::S: return "S";
    case JobKind::X: return "X";
    case JobKind::F: return "F";
    case JobKind::C: return "C";
    case JobKind::B: return "B";
    case JobKind::Unit: return "Unit";
    case JobKind::Generic: return "Generic";
    }
    return "?";
}

std::optional<JobKind> kind_from_string(std::string_view name) {
    static constexpr std::array<JobKind, 7> kinds = {
        JobKind::S, JobKind::X, JobKind::F,    JobKind::C,
        JobKind::B, JobKind::Unit, JobKind::Generic};
    for (JobKind k : kinds)
        if (name == to_string(k))
            return k;
    return std::nullopt;
}

int vertical_rank(JobKind kind) {
    switch (kind) {
    case JobKind::F: return 0;
    case JobKind::X: return 1;
    case JobKind::S: return 2;
    case JobKind::C: return 3;
    case JobKind::B: return 4;
    case JobKind::Unit: return 5;
    case JobKind::Generic: return 6;
    }
    return 7;
}

const char* to_string(ViolationCode code) {
    switch (code) {
    case ViolationCode::MACHINE_OVERLAP: return "MACHINE_OVERLAP";
    case ViolationCode::JOB_OVERLAP: return "JOB_OVERLAP";
    case ViolationCode::RELEASE_VIOLATION: return "RELEASE_VIOLATION";
    case ViolationCode::WRONG_TOTAL_WORK: return "WRONG_TOTAL_WORK";
    case ViolationCode::UNKNOWN_JOB: return "UNKNOWN_JOB";
    case ViolationCode::BAD_MACHINE: return "BAD_MACHINE";
    case ViolationCode::BAD_INTERVAL: return "BAD_INTERVAL";
    case ViolationCode::BAD_COUNT: return "BAD_COUNT";
    case ViolationCode::NONPOSITIVE_VALUE: return "NONPOSITIVE_VALUE";
    case ViolationCode::SUM_MISMATCH: return "SUM_MISMATCH";
    case ViolationCode::VALUE_OUT_OF_RANGE: return "VALUE_OUT_OF_RANGE";
    }
    return "?";
}

// ---------------------------------------------------------------------
// Instance

Instance::Instance(std::int64_t machines, std::vector<Job> jobs,
                   std::vector<JobGroup> groups)
    : machines_(machines), explicit_(std::move(jobs)),
      groups_(std::move(groups)) {
    check_invariants();
}

Instance::Instance(const Instance& other)
    : machines_(other.machines_), explicit_(other.explicit_),
      groups_(other.groups_) {
    std::lock_guard<std::mutex> lock(other.table_mutex_);
    table_ = other.table_;
}

Instance& Instance::operator=(const Instance& other) {
    if (this == &other)
        return *this;
    std::shared_ptr<const JobTable> t;
    {
        std::lock_guard<std::mutex> lock(other.table_mutex_);
        t = other.table_;
    }
    std::lock_guard<std::mutex> lock(table_mutex_);
    machines_ = other.machines_;
    explicit_ = other.explicit_;
    groups_ = other.groups_;
    table_ = std::move(t);
    return *this;
}

Instance::Instance(Instance&& other) noexcept
    : machines_(other.machines_), explicit_(std::move(other.explicit_)),
      groups_(std::move(other.groups_)), table_(std::move(other.table_)) {}

Instance& Instance::operator=(Instance&& other) noexcept {
    machines_ = other.machines_;
    explicit_ = std::move(other.explicit_);
    groups_ = std::move(other.groups_);
    table_ = std::move(other.table_);
    return *this;
}

bool Instance::operator==(const Instance& other) const {
    return machines_ == other.machines_ && explicit_ == other.explicit_ &&
           groups_ == other.groups_;
}

void Instance::check_invariants() const {
    if (machines_ < 1)
        throw Error(Errc::invalid_instance, "machines must be >= 1");
    // id ranges: explicit jobs are points, groups are [base, base+count).
    std::vector<std::pair<JobId, JobId>> ranges;
    ranges.reserve(explicit_.size() + groups_.size());
    for (const Job& job : explicit_) {
        if (job.id < 0)
            throw Error(Errc::invalid_instance, "job id must be >= 0");
        if (job.ptime < 1)
            throw Error(Errc::invalid_instance, "ptime must be >= 1");
        if (job.release < 0)
            throw Error(Errc::invalid_instance, "release must be >= 0");
        ranges.emplace_back(job.id, checked_add(job.id, 1));
    }
    for (const JobGroup& g : groups_) {
        if (g.base_id < 0)
            throw Error(Errc::invalid_instance, "group base id must be >= 0");
        if (g.count < 1)
            throw Error(Errc::invalid_instance, "group count must be >= 1");
        if (g.span < 1 || g.count % g.span != 0)
            throw Error(Errc::invalid_instance,
                        "group span must divide its count");
        if (g.ptime < 1)
            throw Error(Errc::invalid_instance, "ptime must be >= 1");
        if (g.release < 0)
            throw Error(Errc::invalid_instance, "release must be >= 0");
        ranges.emplace_back(g.base_id, checked_add(g.base_id, g.count));
    }
    std::sort(ranges.begin(), ranges.end());
    for (std::size_t i = 1; i < ranges.size(); ++i)
        if (ranges[i].first < ranges[i - 1].second)
            throw Error(Errc::invalid_instance, "duplicate job ids");
}

std::int64_t Instance::job_count() const {
    std::int64_t total = static_cast<std::int64_t>(explicit_.size());
    for (const JobGroup& g : groups_)
        total = checked_add(total, g.count);
    return total;
}

const JobTable& Instance::table() const {
    std::lock_guard<std::mutex> lock(table_mutex_);
    if (!table_) {
        auto t = std::make_shared<JobTable>();
        t->jobs.reserve(static_cast<std::size_t>(job_count()));
        for (const Job& job : explicit_)
            t->jobs.push_back(job);
        for (const JobGroup& g : groups_) {
            JobId id = g.base_id;
            const std::int64_t per_release = g.per_release();
            for (std::int64_t s = 0; s < g.span; ++s)
                for (std::int64_t c = 0; c < per_release; ++c)
                    t->jobs.push_back(
                        Job{id++, g.release + s, g.ptime, g.kind});
        }
        t->index_by_id.reserve(t->jobs.size());
        for (std::size_t i = 0; i < t->jobs.size(); ++i)
            t->index_by_id.emplace(t->jobs[i].id, i);
        table_ = std::move(t);
    }
    return *table_;
}

// ---------------------------------------------------------------------
// Operations

Time schedule_horizon(const Schedule& schedule) {
    Time h = 0;
    for (const ExecInterval& iv : schedule.intervals)
        h = std::max(h, iv.end);
    return h;
}

ValidationReport validate_schedule(const Instance& instance,
                                   const Schedule& schedule) {
    ValidationReport report;
    const JobTable& table = instance.table();

    for (const ExecInterval& iv : schedule.intervals) {
        if (iv.start >= iv.end || iv.start < 0)
            report.add({ViolationCode::BAD_INTERVAL, iv.job, iv.machine,
                        iv.start, "interval must satisfy 0 <= start < end"});
        if (iv.machine < 1 || iv.machine > instance.machines())
            report.add({ViolationCode::BAD_MACHINE, iv.job, iv.machine,
                        iv.start, "machine index out of range"});
        if (!table.find(iv.job))
            report.add({ViolationCode::UNKNOWN_JOB, iv.job, iv.machine,
                        iv.start, "interval references a job not in the instance"});
    }

    // Disjointness per machine.
    std::vector<const ExecInterval*> by_machine;
    by_machine.reserve(schedule.intervals.size());
    for (const ExecInterval& iv : schedule.intervals)
        by_machine.push_back(&iv);
    std::sort(by_machine.begin(), by_machine.end(),
              [](const ExecInterval* a, const ExecInterval* b) {
                  return std::tie(a->machine, a->start, a->end, a->job) <
                         std::tie(b->machine, b->start, b->end, b->job);
              });
    for (std::size_t i = 1; i < by_machine.size(); ++i) {
        const ExecInterval* prev = by_machine[i - 1];
        const ExecInterval* cur = by_machine[i];
        if (cur->machine == prev->machine && cur->start < prev->end)
            report.add({ViolationCode::MACHINE_OVERLAP, cur->job,
                        cur->machine, cur->start,
                        "two intervals overlap on one machine"});
    }

    // Disjointness per job, release times, total work.
    std::unordered_map<JobId, std::vector<const ExecInterval*>> by_job;
    for (const ExecInterval& iv : schedule.intervals)
        by_job[iv.job].push_back(&iv);
    for (auto& [id, ivs] : by_job) {
        std::sort(ivs.begin(), ivs.end(),
                  [](const ExecInterval* a, const ExecInterval* b) {
                      return std::tie(a->start, a->end, a->machine) <
                             std::tie(b->start, b->end, b->machine);
                  });
        for (std::size_t i = 1; i < ivs.size(); ++i)
            if (ivs[i]->start < ivs[i - 1]->end)
                report.add({ViolationCode::JOB_OVERLAP, id,
                            ivs[i]->machine, ivs[i]->start,
                            "job runs on two machines at once"});
        const Job* job = table.find(id);
        if (!job)
            continue; // already reported as UNKNOWN_JOB
        std::int64_t work = 0;
        for (const ExecInterval* iv : ivs) {
            if (iv->start < job->release)
                report.add({ViolationCode::RELEASE_VIOLATION, id,
                            iv->machine, iv->start,
                            "interval starts before the release time"});
            work = checked_add(work, iv->end - iv->start);
        }
        if (work != job->ptime)
            report.add({ViolationCode::WRONG_TOTAL_WORK, id, std::nullopt,
                        std::nullopt,
                        "scheduled work " + std::to_string(work) +
                            " != ptime " + std::to_string(job->ptime)});
    }

    // Jobs with no intervals at all make the schedule incomplete.
    for (const Job& job : table.jobs)
        if (!by_job.count(job.id))
            report.add({ViolationCode::WRONG_TOTAL_WORK, job.id,
                        std::nullopt, std::nullopt,
                        "job has no execution intervals"});

    return report;
}

Time completion_time(const Schedule& schedule, JobId job) {
    Time best = -1;
    for (const ExecInterval& iv : schedule.intervals)
        if (iv.job == job)
            best = std::max(best, iv.end);
    if (best < 0)
        throw Error(Errc::unknown_job,
                    "job " + std::to_string(job) +
                        " has no intervals in the schedule");
    return best;
}

ObjectiveBreakdown evaluate(const Instance& instance,
                            const Schedule& schedule) {
    ValidationReport report = validate_schedule(instance, schedule);
    if (!report.feasible) {
        const Violation& v = report.violations.front();
        throw Error(Errc::infeasible,
                    std::string("schedule is infeasible: ") +
                        to_string(v.code) +
                        (v.job ? " (job " + std::to_string(*v.job) + ")"
                               : ""));
    }

    const JobTable& table = instance.table();
    std::unordered_map<JobId, Time> completion;
    completion.reserve(table.jobs.size());
    for (const ExecInterval& iv : schedule.intervals) {
        auto [it, inserted] = completion.emplace(iv.job, iv.end);
        if (!inserted)
            it->second = std::max(it->second, iv.end);
    }

    ObjectiveBreakdown breakdown;
    for (const Job& job : table.jobs) {
        const Time c = completion.at(job.id);
        breakdown.total_completion =
            checked_add(breakdown.total_completion, c);
        const std::int64_t delay =
            checked_sub(checked_sub(c, job.release), job.ptime);
        breakdown.total_delay = checked_add(breakdown.total_delay, delay);
        auto [it, _] = breakdown.delay_by_kind.emplace(job.kind, 0);
        it->second = checked_add(it->second, delay);
    }
    return breakdown;
}

std::vector<std::int64_t> kind_slot_counts(const Instance& instance,
                                           const Schedule& schedule,
                                           JobKind kind, Time horizon) {
    std::vector<std::int64_t> diff(static_cast<std::size_t>(horizon) + 1, 0);
    const JobTable& table = instance.table();
    for (const ExecInterval& iv : schedule.intervals) {
        const Job* job = table.find(iv.job);
        if (!job || job->kind != kind)
            continue;
        const Time a = std::clamp<Time>(iv.start, 0, horizon);
        const Time b = std::clamp<Time>(iv.end, 0, horizon);
        if (a < b) {
            diff[static_cast<std::size_t>(a)] += 1;
            diff[static_cast<std::size_t>(b)] -= 1;
        }
    }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(horizon), 0);
    std::int64_t running = 0;
    for (Time t = 0; t < horizon; ++t) {
        running += diff[static_cast<std::size_t>(t)];
        counts[static_cast<std::size_t>(t)] = running;
    }
    return counts;
}

namespace {

// Lexicographic "earlier profile" comparison; true iff a is strictly
// earlier than b at the first differing slot.
int profile_compare(const std::vector<std::int64_t>& a,
                    const std::vector<std::int64_t>& b) {
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] != b[t])
            return a[t] > b[t] ? 1 : -1;
    }
    return 0;
}

} // namespace

bool dominates(const Schedule& s1, const Schedule& s2,
               const Instance& instance) {
    const Time horizon =
        std::max(schedule_horizon(s1), schedule_horizon(s2));
    const auto s_profile1 = kind_slot_counts(instance, s1, JobKind::S, horizon);
    const auto s_profile2 = kind_slot_counts(instance, s2, JobKind::S, horizon);
    const int s_cmp = profile_compare(s_profile1, s_profile2);
    if (s_cmp != 0)
        return s_cmp > 0;
    const auto x_profile1 = kind_slot_counts(instance, s1, JobKind::X, horizon);
    const auto x_profile2 = kind_slot_counts(instance, s2, JobKind::X, horizon);
    return profile_compare(x_profile1, x_profile2) > 0;
}

} // namespace flowtime
