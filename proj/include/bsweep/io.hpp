#pragma once

// JSON files for instances, plans and simulation reports.

#include <stdexcept>
#include <string>
#include <variant>

#include "bsweep/datamule.hpp"
#include "bsweep/harness.hpp"
#include "bsweep/multi_planner.hpp"
#include "bsweep/plan.hpp"
#include "bsweep/simulator.hpp"

namespace bsweep {

/// Malformed or incomplete file content.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

using AnyPlan = std::variant<DeploymentPlan, MultiDeploymentPlan, DataMulePlan>;

/// Plan file text. Multi-component plans put component 0 at the top level
/// and every component under metadata.components.
std::string plan_to_json(const AnyPlan& plan);
AnyPlan plan_from_json(const std::string& text);

std::string report_to_json(const CoverageReport& r);
std::string report_to_json(const RechargeReport& r);
std::string report_to_json(const MeetingReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bsweep
