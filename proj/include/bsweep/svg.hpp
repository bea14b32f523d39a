#pragma once

// SVG 1.1 renders of instances and plans. Elements carry a class attribute
// (curve, connector, tour, sensor, source) so they can be styled or counted.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsweep/datamule.hpp"
#include "bsweep/geometry.hpp"
#include "bsweep/harness.hpp"
#include "bsweep/multi_planner.hpp"
#include "bsweep/plan.hpp"

namespace bsweep {

struct RenderTour {
  Polyline tour;
  std::vector<double> sensor_offsets;
  std::vector<Segment> connectors;
};

struct RenderScene {
  double region_side = 200.0;
  std::vector<Polyline> curves;
  std::vector<RenderTour> tours;
  std::optional<Point2D> energy_source;
};

std::string render_svg(const RenderScene& scene);

std::string render_svg(const Instance& inst);
std::string render_svg(const Instance& inst, const DeploymentPlan& plan);
std::string render_svg(const Instance& inst, const MultiDeploymentPlan& plan);
std::string render_svg(const Instance& inst, const DataMulePlan& plan);

}  // namespace bsweep
