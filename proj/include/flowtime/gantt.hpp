#ifndef FLOWTIME_GANTT_HPP
#define FLOWTIME_GANTT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "flowtime/model.hpp"
#include "flowtime/reduction.hpp"

namespace flowtime {

struct GanttOptions {
    /// Time units per horizontal pixel; 0 picks the smallest value that
    /// fits max_width.
    std::int64_t scale = 0;
    /// Cap on the drawing width in pixels.
    std::int64_t max_width = 1400;
};

/// Deterministic SVG Gantt chart: one row per machine, time on the
/// horizontal axis, rectangles colored by job kind. Runs of consecutive
/// unit jobs of one kind are compressed into a single rectangle. With
/// reduction parameters, vertical lines mark the block boundaries and T.
/// Byte-identical output for identical inputs.
std::string render_gantt_svg(const Instance& instance,
                             const Schedule& schedule,
                             const std::optional<ReductionParams>& params,
                             const GanttOptions& options = {});

} // namespace flowtime

#endif
