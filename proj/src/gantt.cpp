#include "flowtime/gantt.hpp"

#include <algorithm>
#include <sstream>

namespace flowtime {

namespace {

const char* kind_color(JobKind kind) {
    switch (kind) {
    case JobKind::S: return "#4e9a06";
    case JobKind::X: return "#cc0000";
    case JobKind::F: return "#3465a4";
    case JobKind::C: return "#edd400";
    case JobKind::B: return "#75507b";
    case JobKind::Unit: return "#f57900";
    case JobKind::Generic: return "#888a85";
    }
    return "#000000";
}

struct Box {
    std::int64_t machine;
    Time start;
    Time end;
    JobKind kind;
    JobId job;      // -1 for a compressed run of several unit jobs
    std::int64_t jobs; // number of jobs drawn as this box
};

constexpr std::int64_t kRowHeight = 26;
constexpr std::int64_t kRowGap = 6;
constexpr std::int64_t kLeftMargin = 52;
constexpr std::int64_t kTopMargin = 24;
constexpr std::int64_t kBottomMargin = 30;

} // namespace

std::string render_gantt_svg(const Instance& instance,
                             const Schedule& schedule,
                             const std::optional<ReductionParams>& params,
                             const GanttOptions& options) {
    const JobTable& table = instance.table();

    Time horizon = schedule_horizon(schedule);
    if (params)
        horizon = std::max(horizon, params->T + params->opt);
    if (horizon < 1)
        horizon = 1;

    std::int64_t scale = options.scale; // time units per pixel
    if (scale < 1)
        scale = 1;
    const std::int64_t max_width = std::max<std::int64_t>(options.max_width, 64);
    scale = std::max(scale, (horizon + max_width - 1) / max_width);
    const auto time_to_x = [&](Time t) {
        return kLeftMargin + t / scale;
    };
    const std::int64_t plot_width = (horizon + scale - 1) / scale;
    const std::int64_t width = kLeftMargin + plot_width + 12;
    const std::int64_t height = kTopMargin +
                                instance.machines() * (kRowHeight + kRowGap) +
                                kBottomMargin;

    // sort intervals, then compress runs of consecutive unit jobs of one
    // kind into single boxes
    std::vector<const ExecInterval*> sorted;
    sorted.reserve(schedule.intervals.size());
    for (const ExecInterval& iv : schedule.intervals)
        sorted.push_back(&iv);
    std::sort(sorted.begin(), sorted.end(),
              [](const ExecInterval* a, const ExecInterval* b) {
                  return std::tie(a->machine, a->start, a->job) <
                         std::tie(b->machine, b->start, b->job);
              });

    std::vector<Box> boxes;
    for (const ExecInterval* iv : sorted) {
        const Job* job = table.find(iv->job);
        const JobKind kind = job ? job->kind : JobKind::Generic;
        const bool unit = job && job->ptime == 1;
        if (!boxes.empty()) {
            Box& last = boxes.back();
            const Job* last_job = table.find(last.job);
            const bool last_unit =
                last.job == -1 || (last_job && last_job->ptime == 1);
            if (last.machine == iv->machine && last.end == iv->start &&
                last.kind == kind && unit && last_unit) {
                last.end = iv->end;
                last.jobs += 1;
                last.job = -1;
                continue;
            }
        }
        boxes.push_back({iv->machine, iv->start, iv->end, kind, iv->job, 1});
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\""
        << height << "\" fill=\"#ffffff\"/>\n";

    // machine rows
    for (std::int64_t m = 1; m <= instance.machines(); ++m) {
        const std::int64_t y =
            kTopMargin + (m - 1) * (kRowHeight + kRowGap);
        svg << "<text x=\"6\" y=\"" << y + kRowHeight - 8
            << "\" font-family=\"monospace\" font-size=\"12\">M" << m
            << "</text>\n";
        svg << "<rect class=\"row\" x=\"" << kLeftMargin << "\" y=\"" << y
            << "\" width=\"" << plot_width << "\" height=\"" << kRowHeight
            << "\" fill=\"#f4f4f4\"/>\n";
    }

    for (const Box& box : boxes) {
        const std::int64_t y =
            kTopMargin + (box.machine - 1) * (kRowHeight + kRowGap);
        const std::int64_t x0 = time_to_x(box.start);
        const std::int64_t x1 = std::max(time_to_x(box.end), x0 + 1);
        svg << "<rect class=\"unit\" x=\"" << x0 << "\" y=\"" << y + 2
            << "\" width=\"" << x1 - x0 << "\" height=\"" << kRowHeight - 4
            << "\" fill=\"" << kind_color(box.kind) << "\"><title>";
        if (box.job >= 0)
            svg << to_string(box.kind) << " job " << box.job;
        else
            svg << box.jobs << " " << to_string(box.kind) << " unit jobs";
        svg << " [" << box.start << "," << box.end << ")"
            << "</title></rect>\n";
    }

    // block boundaries B_1..B_3n and the cork boundary at T
    if (params) {
        const std::int64_t rows_bottom =
            kTopMargin + instance.machines() * (kRowHeight + kRowGap) -
            kRowGap;
        std::vector<Time> marks(params->block_starts.begin(),
                                params->block_starts.end() - 1);
        marks.push_back(params->T);
        for (Time mark : marks) {
            const std::int64_t x = time_to_x(mark);
            svg << "<line class=\"block-boundary\" x1=\"" << x
                << "\" y1=\"" << kTopMargin - 4 << "\" x2=\"" << x
                << "\" y2=\"" << rows_bottom + 4
                << "\" stroke=\"#2e3436\" stroke-dasharray=\"3,2\"/>\n";
        }
    }

    // time axis
    const std::int64_t axis_y = height - kBottomMargin + 10;
    svg << "<text x=\"" << kLeftMargin << "\" y=\"" << axis_y
        << "\" font-family=\"monospace\" font-size=\"11\">0</text>\n";
    svg << "<text x=\"" << kLeftMargin + plot_width << "\" y=\"" << axis_y
        << "\" font-family=\"monospace\" font-size=\"11\" "
           "text-anchor=\"end\">"
        << horizon << "</text>\n";

    svg << "</svg>\n";
    return svg.str();
}

} // namespace flowtime
