#ifndef FLOWTIME_JSON_IO_HPP
#define FLOWTIME_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "flowtime/lemmas.hpp"
#include "flowtime/model.hpp"
#include "flowtime/reduction.hpp"
#include "flowtime/threepartition.hpp"

namespace flowtime {

using json = nlohmann::ordered_json;

// All files are UTF-8 JSON with decimal integers only; any non-integer
// number is rejected at parse time (Errc::parse).

json to_json(const Instance& instance);
json to_json(const Schedule& schedule);
json to_json(const ThreePartitionInstance& tp);
json to_json(const ReductionParams& params);
json to_json(const FaultyReductionParams& params);
json to_json(const ObjectiveBreakdown& breakdown);
json to_json(const ValidationReport& report);
json to_json(const LemmaReport& report);

Instance instance_from_json(const json& j);
Schedule schedule_from_json(const json& j);
ThreePartitionInstance tp_from_json(const json& j);
ReductionParams reduction_params_from_json(const json& j);
FaultyReductionParams faulty_params_from_json(const json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace flowtime

#endif
