// flowtime: generate, transform, schedule, validate and draw preemptive
// mean-flow-time instances.

#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "flowtime/algorithms.hpp"
#include "flowtime/exact.hpp"
#include "flowtime/gantt.hpp"
#include "flowtime/json_io.hpp"
#include "flowtime/lemmas.hpp"
#include "flowtime/model.hpp"
#include "flowtime/reduction.hpp"
#include "flowtime/threepartition.hpp"

namespace {

using namespace flowtime;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitTooLarge = 3;

std::string default_params_path(const std::string& out_path) {
    const std::string suffix = ".json";
    if (out_path.size() > suffix.size() &&
        out_path.compare(out_path.size() - suffix.size(), suffix.size(),
                         suffix) == 0)
        return out_path.substr(0, out_path.size() - suffix.size()) +
               ".params.json";
    return out_path + ".params.json";
}

Partition parse_partition(const std::string& text) {
    Partition partition;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<std::int64_t> part;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                part.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw Error(Errc::parse,
                            "partition must look like \"1,2,3;4,5,6\"");
            }
        }
        if (!part.empty())
            partition.push_back(std::move(part));
    }
    if (partition.empty())
        throw Error(Errc::parse, "empty partition");
    return partition;
}

int cmd_gen3p(std::int64_t n, std::int64_t y, std::uint64_t seed,
              const std::string& out) {
    if (n < 1 || y < 3)
        throw Error(Errc::invalid_instance, "need n >= 1 and y >= 3");
    std::mt19937_64 rng(seed);
    // each triple (a, b, y-a-b) stays strictly inside (y/4, y/2), so the
    // generated instance is valid and solvable by construction
    const std::int64_t lo = y / 4 + 1;
    const std::int64_t hi = (y - 1) / 2;
    if (lo > hi)
        throw Error(Errc::invalid_instance,
                    "no integers lie strictly between y/4 and y/2");
    std::uniform_int_distribution<std::int64_t> pick(lo, hi);
    ThreePartitionInstance tp;
    tp.n = n;
    tp.y = y;
    for (std::int64_t k = 0; k < n; ++k) {
        for (;;) {
            const std::int64_t a = pick(rng);
            const std::int64_t b = pick(rng);
            const std::int64_t c = y - a - b;
            if (4 * c > y && 2 * c < y) {
                tp.xs.push_back(a);
                tp.xs.push_back(b);
                tp.xs.push_back(c);
                break;
            }
        }
    }
    std::shuffle(tp.xs.begin(), tp.xs.end(), rng);
    const ValidationReport report = validate_3partition(tp);
    if (!report.feasible)
        throw Error(Errc::invalid_instance, "generator produced an invalid "
                                            "instance");
    save_json_file(out, to_json(tp));
    std::cout << "wrote " << out << " (n=" << n << ", y=" << y << ")\n";
    return kExitOk;
}

int cmd_reduce(bool corrected, const std::string& in,
               const std::string& out, std::string params_path) {
    const ThreePartitionInstance tp = tp_from_json(load_json_file(in));
    if (params_path.empty())
        params_path = default_params_path(out);
    if (corrected) {
        auto [instance, params] = corrected_reduce(tp);
        save_json_file(out, to_json(instance));
        save_json_file(params_path, to_json(params));
        std::cout << "corrected reduction: " << instance.job_count()
                  << " jobs on " << instance.machines()
                  << " machines; lambda=" << params.lambda
                  << " L=" << params.L << " opt=" << params.opt
                  << " T=" << params.T << "\n";
    } else {
        auto [instance, params] = faulty_reduce(tp);
        save_json_file(out, to_json(instance));
        save_json_file(params_path, to_json(params));
        std::cout << "refuted reduction: " << instance.job_count()
                  << " jobs on " << instance.machines()
                  << " machines; A=" << params.A << " B=" << params.B
                  << " D=" << params.D << "\n";
    }
    std::cout << "wrote " << out << " and " << params_path << "\n";
    return kExitOk;
}

int cmd_validate(const std::string& inst_path,
                 const std::string& sched_path) {
    const Instance instance = instance_from_json(load_json_file(inst_path));
    const Schedule schedule = schedule_from_json(load_json_file(sched_path));
    const ValidationReport report = validate_schedule(instance, schedule);
    if (report.feasible) {
        std::cout << "feasible\n";
        return kExitOk;
    }
    const Violation& first = report.violations.front();
    std::cout << "infeasible: " << to_string(first.code);
    if (first.job)
        std::cout << " job=" << *first.job;
    if (first.machine)
        std::cout << " machine=" << *first.machine;
    if (first.time)
        std::cout << " time=" << *first.time;
    if (!first.note.empty())
        std::cout << " (" << first.note << ")";
    std::cout << "\n"
              << report.violations.size() << " violation(s) total\n";
    return kExitCheckFailed;
}

int cmd_evaluate(const std::string& inst_path,
                 const std::string& sched_path) {
    const Instance instance = instance_from_json(load_json_file(inst_path));
    const Schedule schedule = schedule_from_json(load_json_file(sched_path));
    std::cout << to_json(evaluate(instance, schedule)).dump(2) << "\n";
    return kExitOk;
}

int cmd_srpt(const std::string& inst_path, const std::string& out) {
    const Instance instance = instance_from_json(load_json_file(inst_path));
    const Schedule schedule = srpt_single_machine(instance);
    if (!out.empty())
        save_json_file(out, to_json(schedule));
    std::cout << to_json(evaluate(instance, schedule)).dump(2) << "\n";
    return kExitOk;
}

int cmd_mcnaughton(const std::string& inst_path, const std::string& out,
                   Time start, Time end) {
    const Instance instance = instance_from_json(load_json_file(inst_path));
    std::vector<std::pair<JobId, Time>> jobs;
    std::int64_t total = 0;
    Time longest = 0;
    for (const Job& job : instance.jobs()) {
        jobs.emplace_back(job.id, job.ptime);
        total = checked_add(total, job.ptime);
        longest = std::max(longest, job.ptime);
    }
    if (end <= start) {
        // classic optimal makespan window
        const Time span = std::max(
            longest, (total + instance.machines() - 1) / instance.machines());
        end = checked_add(start, span);
    }
    const Window window{start, end, instance.machines()};
    const Schedule schedule = mcnaughton_pack(jobs, window);
    if (!out.empty())
        save_json_file(out, to_json(schedule));
    std::cout << "packed " << jobs.size() << " jobs into [" << window.start
              << "," << window.end << ") on " << window.machines
              << " machines (" << schedule.intervals.size()
              << " intervals)\n";
    return kExitOk;
}

int cmd_solve_exact(const std::string& inst_path, const std::string& out,
                    Time horizon) {
    const Instance instance = instance_from_json(load_json_file(inst_path));
    const ExactResult result = horizon > 0 ? exact_solve(instance, horizon)
                                           : exact_solve(instance);
    if (!out.empty())
        save_json_file(out, to_json(result.schedule));
    std::cout << to_json(result.objective).dump(2) << "\n";
    return kExitOk;
}

int cmd_ideal(const std::string& tp_path, const std::string& partition_text,
              bool solve, const std::string& sched_out,
              const std::string& inst_out, const std::string& params_out) {
    const ThreePartitionInstance tp = tp_from_json(load_json_file(tp_path));
    Partition partition;
    if (solve) {
        auto found = solve_3partition_bruteforce(tp);
        if (!found) {
            std::cout << "3-Partition: no solution, no ideal schedule\n";
            return kExitCheckFailed;
        }
        partition = *found;
    } else {
        partition = parse_partition(partition_text);
    }
    const IdealArtifacts art = build_ideal_schedule(tp, partition);
    if (!sched_out.empty())
        save_json_file(sched_out, to_json(art.schedule));
    if (!inst_out.empty())
        save_json_file(inst_out, to_json(art.instance));
    if (!params_out.empty())
        save_json_file(params_out, to_json(art.params));
    const ObjectiveBreakdown breakdown = evaluate(art.instance, art.schedule);
    std::cout << "total delay " << breakdown.total_delay << " (opt = "
              << art.params.opt << ")\n";
    return breakdown.total_delay == art.params.opt ? kExitOk
                                                   : kExitCheckFailed;
}

int cmd_counterexample(bool verify, const std::string& inst_out,
                       const std::string& sched_out,
                       const std::string& params_out) {
    const CounterexampleArtifacts art = build_counterexample_schedule();
    if (!inst_out.empty())
        save_json_file(inst_out, to_json(art.instance));
    if (!sched_out.empty())
        save_json_file(sched_out, to_json(art.schedule));
    if (!params_out.empty())
        save_json_file(params_out, to_json(art.params));

    std::cout << "instance: " << art.instance.job_count() << " jobs on "
              << art.instance.machines() << " machines, A=" << art.params.A
              << " B=" << art.params.B << "\n";
    if (!verify)
        return kExitOk;

    bool ok = true;
    const ValidationReport report =
        validate_schedule(art.instance, art.schedule);
    std::cout << "schedule feasible: " << (report.feasible ? "yes" : "no")
              << "\n";
    ok = ok && report.feasible;

    const Time ay = art.params.A * art.tp.y;
    Time last_x = 0;
    for (const Job& job : art.instance.jobs())
        if (job.kind == JobKind::X)
            last_x = std::max(last_x,
                              completion_time(art.schedule, job.id));
    std::cout << "x-jobs complete by " << last_x << " (Ay = " << ay
              << "): " << (last_x <= ay ? "yes" : "no") << "\n";
    ok = ok && last_x <= ay;

    const ObjectiveBreakdown breakdown =
        evaluate(art.instance, art.schedule);
    std::cout << "sum C_j = " << breakdown.total_completion
              << " <= D = " << art.params.D << ": "
              << (breakdown.total_completion <= art.params.D ? "yes" : "no")
              << "\n";
    ok = ok && breakdown.total_completion <= art.params.D;

    const auto solution = solve_3partition_bruteforce(art.tp);
    std::cout << "3-Partition: "
              << (solution ? "solution exists" : "no solution") << "\n";
    ok = ok && !solution;

    std::cout << (ok ? "counterexample verified: the threshold is beaten "
                       "although 3-Partition has no solution\n"
                     : "verification FAILED\n");
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check_lemmas(const std::string& inst_path,
                     const std::string& params_path,
                     const std::string& sched_path) {
    const Instance instance = instance_from_json(load_json_file(inst_path));
    const ReductionParams params =
        reduction_params_from_json(load_json_file(params_path));
    const Schedule schedule = schedule_from_json(load_json_file(sched_path));

    const std::vector<LemmaReport> reports =
        run_all_checks(instance, params, schedule);
    const ZSeries z = compute_z_series(instance, params, schedule);
    const ExcessMatrix excess = compute_excess(instance, params, schedule);

    json out;
    out["checks"] = json::array();
    bool all_pass = true;
    for (const LemmaReport& report : reports) {
        out["checks"].push_back(to_json(report));
        all_pass = all_pass && report.passed();
    }
    out["z_sum"] = z.total;
    out["total_excess"] = excess.total_excess();
    out["total_deficiency"] = excess.total_deficiency();
    out["delay_s_lower_bound"] =
        delay_s_lower_bound(instance, params, schedule);
    out["all_pass"] = all_pass;
    std::cout << out.dump(2) << "\n";
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_gantt(const std::string& inst_path, const std::string& sched_path,
              const std::string& params_path, const std::string& out,
              std::int64_t scale, std::int64_t max_width) {
    const Instance instance = instance_from_json(load_json_file(inst_path));
    const Schedule schedule = schedule_from_json(load_json_file(sched_path));
    std::optional<ReductionParams> params;
    if (!params_path.empty())
        params = reduction_params_from_json(load_json_file(params_path));
    GanttOptions options;
    options.scale = scale;
    options.max_width = max_width;
    write_text_file(out, render_gantt_svg(instance, schedule, params,
                                          options));
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"laboratory for preemptive mean-flow-time scheduling on "
                 "identical machines"};
    app.require_subcommand(1);

    // gen-3p
    auto* gen = app.add_subcommand("gen-3p",
                                   "generate a solvable 3-Partition instance");
    std::int64_t gen_n = 2, gen_y = 27;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("-n", gen_n, "number of triples");
    gen->add_option("-y", gen_y, "target sum per triple");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("-o,--output", gen_out, "output file")->required();

    // reduce
    auto* reduce = app.add_subcommand(
        "reduce", "transform a 3-Partition instance into a scheduling one");
    bool reduce_faulty = false, reduce_corrected = false;
    std::string reduce_in, reduce_out, reduce_params;
    reduce->add_flag("--faulty", reduce_faulty, "use the refuted reduction");
    reduce->add_flag("--corrected", reduce_corrected,
                     "use the corrected reduction");
    reduce->add_option("-i,--input", reduce_in, "3-Partition JSON")
        ->required();
    reduce->add_option("-o,--output", reduce_out, "instance JSON")
        ->required();
    reduce->add_option("--params", reduce_params,
                       "parameters file (default: <output>.params.json)");

    // validate
    auto* validate = app.add_subcommand("validate",
                                        "check schedule feasibility");
    std::string val_inst, val_sched;
    validate->add_option("-i,--instance", val_inst, "instance JSON")
        ->required();
    validate->add_option("-s,--schedule", val_sched, "schedule JSON")
        ->required();

    // evaluate
    auto* eval = app.add_subcommand("evaluate",
                                    "objective breakdown of a schedule");
    std::string eval_inst, eval_sched;
    eval->add_option("-i,--instance", eval_inst, "instance JSON")
        ->required();
    eval->add_option("-s,--schedule", eval_sched, "schedule JSON")
        ->required();

    // srpt
    auto* srpt = app.add_subcommand("srpt", "single-machine SRPT schedule");
    std::string srpt_inst, srpt_out;
    srpt->add_option("-i,--instance", srpt_inst, "instance JSON")
        ->required();
    srpt->add_option("-o,--output", srpt_out, "schedule JSON");

    // mcnaughton
    auto* mc = app.add_subcommand("mcnaughton",
                                  "wrap-around packing of the instance jobs");
    std::string mc_inst, mc_out;
    Time mc_start = 0, mc_end = 0;
    mc->add_option("-i,--instance", mc_inst, "instance JSON")->required();
    mc->add_option("-o,--output", mc_out, "schedule JSON");
    mc->add_option("--start", mc_start, "window start (default 0)");
    mc->add_option("--end", mc_end,
                   "window end (default: optimal makespan window)");

    // solve-exact
    auto* exact = app.add_subcommand("solve-exact",
                                     "optimal schedule of a micro instance");
    std::string exact_inst, exact_out;
    Time exact_horizon = 0;
    exact->add_option("-i,--instance", exact_inst, "instance JSON")
        ->required();
    exact->add_option("-o,--output", exact_out, "schedule JSON");
    exact->add_option("--horizon", exact_horizon, "search horizon");

    // ideal
    auto* ideal = app.add_subcommand(
        "ideal", "build the delay-opt schedule from a 3-Partition solution");
    std::string ideal_tp, ideal_partition, ideal_out, ideal_inst_out,
        ideal_params_out;
    bool ideal_solve = false;
    ideal->add_option("-i,--input", ideal_tp, "3-Partition JSON")
        ->required();
    ideal->add_option("--partition", ideal_partition,
                      "solution, e.g. \"1,2,3;4,5,6\" (1-based)");
    ideal->add_flag("--solve", ideal_solve,
                    "find a solution by brute force instead");
    ideal->add_option("-o,--output", ideal_out, "schedule JSON");
    ideal->add_option("--instance-out", ideal_inst_out, "instance JSON");
    ideal->add_option("--params-out", ideal_params_out, "parameters JSON");

    // counterexample
    auto* cx = app.add_subcommand(
        "counterexample",
        "the fixed instance defeating the refuted reduction");
    bool cx_verify = false;
    std::string cx_inst_out, cx_sched_out, cx_params_out;
    cx->add_flag("--verify", cx_verify, "check all claimed properties");
    cx->add_option("--instance-out", cx_inst_out, "instance JSON");
    cx->add_option("--schedule-out", cx_sched_out, "schedule JSON");
    cx->add_option("--params-out", cx_params_out, "parameters JSON");

    // check-lemmas
    auto* lemmas = app.add_subcommand(
        "check-lemmas", "structural checks for corrected-reduction schedules");
    std::string lem_inst, lem_params, lem_sched;
    lemmas->add_option("-i,--instance", lem_inst, "instance JSON")
        ->required();
    lemmas->add_option("-p,--params", lem_params, "parameters JSON")
        ->required();
    lemmas->add_option("-s,--schedule", lem_sched, "schedule JSON")
        ->required();

    // gantt
    auto* gantt = app.add_subcommand("gantt", "render a schedule as SVG");
    std::string gantt_inst, gantt_sched, gantt_params, gantt_out;
    std::int64_t gantt_scale = 0, gantt_max_width = 1400;
    bool gantt_svg = true;
    gantt->add_option("-i,--instance", gantt_inst, "instance JSON")
        ->required();
    gantt->add_option("-s,--schedule", gantt_sched, "schedule JSON")
        ->required();
    gantt->add_option("-p,--params", gantt_params,
                      "parameters JSON (draws block boundaries)");
    gantt->add_flag("--svg", gantt_svg, "emit SVG (the only format)");
    gantt->add_option("-o,--output", gantt_out, "output SVG file")
        ->required();
    gantt->add_option("--scale", gantt_scale, "time units per pixel");
    gantt->add_option("--max-width", gantt_max_width,
                      "cap on the plot width in pixels");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen3p(gen_n, gen_y, gen_seed, gen_out);
        if (reduce->parsed()) {
            if (reduce_faulty == reduce_corrected) {
                std::cerr << "choose exactly one of --faulty / --corrected\n";
                return kExitInputError;
            }
            return cmd_reduce(reduce_corrected, reduce_in, reduce_out,
                              reduce_params);
        }
        if (validate->parsed())
            return cmd_validate(val_inst, val_sched);
        if (eval->parsed())
            return cmd_evaluate(eval_inst, eval_sched);
        if (srpt->parsed())
            return cmd_srpt(srpt_inst, srpt_out);
        if (mc->parsed())
            return cmd_mcnaughton(mc_inst, mc_out, mc_start, mc_end);
        if (exact->parsed())
            return cmd_solve_exact(exact_inst, exact_out, exact_horizon);
        if (ideal->parsed()) {
            if (!ideal_solve && ideal_partition.empty()) {
                std::cerr << "pass --partition or --solve\n";
                return kExitInputError;
            }
            return cmd_ideal(ideal_tp, ideal_partition, ideal_solve,
                             ideal_out, ideal_inst_out, ideal_params_out);
        }
        if (cx->parsed())
            return cmd_counterexample(cx_verify, cx_inst_out, cx_sched_out,
                                      cx_params_out);
        if (lemmas->parsed())
            return cmd_check_lemmas(lem_inst, lem_params, lem_sched);
        if (gantt->parsed())
            return cmd_gantt(gantt_inst, gantt_sched, gantt_params,
                             gantt_out, gantt_scale, gantt_max_width);
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what()
                  << "\n";
        switch (e.code()) {
        case Errc::too_large: return kExitTooLarge;
        case Errc::infeasible: return kExitCheckFailed;
        default: return kExitInputError;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
