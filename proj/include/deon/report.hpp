// Run reports: the per-query verdicts of one CLI invocation rendered as
// human-readable text or as a JSON document with a fixed key order.

#ifndef DEON_REPORT_HPP_
#define DEON_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "deon/engine.hpp"
#include "deon/scenario.hpp"

namespace deon {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunReport {
  std::string scenario;
  Logic logic = Logic::Sdl;
  // Parallel to `verdicts`.
  std::vector<Query> queries;
  std::vector<Verdict> verdicts;
  std::chrono::microseconds wall_time{0};
  std::string tool_version = kToolVersion;
};

std::vector<std::string> render_model(const Model& m);

nlohmann::ordered_json model_json(const Model& m);
// Timings are left out unless requested so that reports are byte stable.
nlohmann::ordered_json report_json(const RunReport& r, bool with_timings = false);
std::string report_text(const RunReport& r, bool with_timings = false);

}  // namespace deon

#endif  // DEON_REPORT_HPP_
