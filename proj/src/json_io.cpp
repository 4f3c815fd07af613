#include "flowtime/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace flowtime {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(Errc::parse, what);
}

std::int64_t to_int64(const json& v, const std::string& what) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
        parse_fail(what + " must be a decimal integer");
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() >
            static_cast<std::uint64_t>(
                std::numeric_limits<std::int64_t>::max()))
        parse_fail(what + " exceeds the signed 64-bit range");
    return v.get<std::int64_t>();
}

std::int64_t get_int(const json& j, const char* key) {
    if (!j.contains(key))
        parse_fail(std::string("missing field \"") + key + "\"");
    return to_int64(j.at(key), std::string("field \"") + key + "\"");
}

std::int64_t get_int_or(const json& j, const char* key,
                        std::int64_t fallback) {
    return j.contains(key) ? get_int(j, key) : fallback;
}

JobKind get_kind(const json& j) {
    if (!j.contains("kind") || !j.at("kind").is_string())
        parse_fail("missing or non-string \"kind\"");
    const std::string name = j.at("kind").get<std::string>();
    const auto kind = kind_from_string(name);
    if (!kind)
        parse_fail("unknown job kind \"" + name + "\"");
    return *kind;
}

} // namespace

json to_json(const Instance& instance) {
    json j;
    j["machines"] = instance.machines();
    j["jobs"] = json::array();
    for (const Job& job : instance.explicit_jobs())
        j["jobs"].push_back({{"id", job.id},
                             {"release", job.release},
                             {"ptime", job.ptime},
                             {"kind", to_string(job.kind)}});
    if (!instance.groups().empty()) {
        j["groups"] = json::array();
        for (const JobGroup& g : instance.groups()) {
            json gj = {{"id", g.base_id},
                       {"count", g.count},
                       {"release", g.release},
                       {"ptime", g.ptime},
                       {"kind", to_string(g.kind)}};
            if (g.span != 1)
                gj["span"] = g.span;
            j["groups"].push_back(std::move(gj));
        }
    }
    return j;
}

Instance instance_from_json(const json& j) {
    if (!j.is_object())
        parse_fail("instance must be a JSON object");
    const std::int64_t machines = get_int(j, "machines");
    std::vector<Job> jobs;
    if (j.contains("jobs")) {
        if (!j.at("jobs").is_array())
            parse_fail("\"jobs\" must be an array");
        for (const json& jj : j.at("jobs"))
            jobs.push_back(Job{get_int(jj, "id"), get_int(jj, "release"),
                               get_int(jj, "ptime"), get_kind(jj)});
    }
    std::vector<JobGroup> groups;
    if (j.contains("groups")) {
        if (!j.at("groups").is_array())
            parse_fail("\"groups\" must be an array");
        JobId next_default_id = 0;
        for (const Job& job : jobs)
            next_default_id = std::max(next_default_id, job.id + 1);
        for (const json& gj : j.at("groups")) {
            JobGroup g;
            g.count = get_int(gj, "count");
            g.release = get_int(gj, "release");
            g.ptime = get_int(gj, "ptime");
            g.kind = get_kind(gj);
            g.span = get_int_or(gj, "span", 1);
            g.base_id = get_int_or(gj, "id", next_default_id);
            next_default_id = g.base_id + g.count;
            groups.push_back(g);
        }
    }
    try {
        return Instance(machines, std::move(jobs), std::move(groups));
    } catch (const Error& e) {
        parse_fail(std::string("invalid instance: ") + e.what());
    }
}

json to_json(const Schedule& schedule) {
    json j;
    j["intervals"] = json::array();
    for (const ExecInterval& iv : schedule.intervals)
        j["intervals"].push_back({{"job", iv.job},
                                  {"machine", iv.machine},
                                  {"start", iv.start},
                                  {"end", iv.end}});
    return j;
}

Schedule schedule_from_json(const json& j) {
    if (!j.is_object() || !j.contains("intervals") ||
        !j.at("intervals").is_array())
        parse_fail("schedule must be an object with an \"intervals\" array");
    Schedule schedule;
    for (const json& ij : j.at("intervals")) {
        ExecInterval iv;
        iv.job = get_int(ij, "job");
        iv.machine = get_int(ij, "machine");
        iv.start = get_int(ij, "start");
        iv.end = get_int(ij, "end");
        if (iv.machine < 1)
            parse_fail("machines are 1-indexed");
        if (iv.start < 0 || iv.start >= iv.end)
            parse_fail("intervals must satisfy 0 <= start < end");
        schedule.intervals.push_back(iv);
    }
    return schedule;
}

json to_json(const ThreePartitionInstance& tp) {
    return json{{"n", tp.n}, {"y", tp.y}, {"xs", tp.xs}};
}

ThreePartitionInstance tp_from_json(const json& j) {
    if (!j.is_object())
        parse_fail("3-Partition instance must be a JSON object");
    ThreePartitionInstance tp;
    tp.n = get_int(j, "n");
    tp.y = get_int(j, "y");
    if (!j.contains("xs") || !j.at("xs").is_array())
        parse_fail("missing \"xs\" array");
    for (const json& v : j.at("xs"))
        tp.xs.push_back(to_int64(v, "\"xs\" entry"));
    return tp;
}

json to_json(const ReductionParams& params) {
    return json{{"lambda", params.lambda},
                {"L", params.L},
                {"opt", params.opt},
                {"T", params.T},
                {"block_starts", params.block_starts}};
}

ReductionParams reduction_params_from_json(const json& j) {
    ReductionParams params;
    params.lambda = get_int(j, "lambda");
    params.L = get_int(j, "L");
    params.opt = get_int(j, "opt");
    params.T = get_int(j, "T");
    if (!j.contains("block_starts") || !j.at("block_starts").is_array())
        parse_fail("missing \"block_starts\" array");
    for (const json& v : j.at("block_starts"))
        params.block_starts.push_back(to_int64(v, "\"block_starts\" entry"));
    if (params.block_starts.size() < 2)
        parse_fail("\"block_starts\" needs at least two entries");
    return params;
}

json to_json(const FaultyReductionParams& params) {
    return json{{"A", params.A}, {"B", params.B}, {"D", params.D}};
}

FaultyReductionParams faulty_params_from_json(const json& j) {
    FaultyReductionParams params;
    params.A = get_int(j, "A");
    params.B = get_int(j, "B");
    params.D = get_int(j, "D");
    return params;
}

json to_json(const ObjectiveBreakdown& breakdown) {
    json by_kind = json::object();
    for (const auto& [kind, delay] : breakdown.delay_by_kind)
        by_kind[to_string(kind)] = delay;
    return json{{"total_completion", breakdown.total_completion},
                {"total_delay", breakdown.total_delay},
                {"delay_by_kind", std::move(by_kind)}};
}

json to_json(const ValidationReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
        json vj;
        vj["code"] = to_string(v.code);
        if (v.job)
            vj["job"] = *v.job;
        if (v.machine)
            vj["machine"] = *v.machine;
        if (v.time)
            vj["time"] = *v.time;
        if (!v.note.empty())
            vj["note"] = v.note;
        violations.push_back(std::move(vj));
    }
    return json{{"feasible", report.feasible},
                {"violations", std::move(violations)}};
}

json to_json(const LemmaReport& report) {
    json j;
    j["name"] = report.name;
    j["status"] = to_string(report.status);
    if (report.witness) {
        json w = json::object();
        if (report.witness->machine)
            w["machine"] = *report.witness->machine;
        if (report.witness->block)
            w["block"] = *report.witness->block;
        if (report.witness->time)
            w["time"] = *report.witness->time;
        if (report.witness->job)
            w["job"] = *report.witness->job;
        if (!report.witness->note.empty())
            w["note"] = report.witness->note;
        j["witness"] = std::move(w);
    }
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::parse, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::parse, "cannot write " + path);
    out << content;
}

json load_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(Errc::parse, "malformed JSON in " + path);
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace flowtime
