#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsweep/geometry.hpp"

namespace bsweep {

/// One {e, p, q, e} loop: leave the energy source, sweep the curve arc
/// [start_arc, end_arc] clockwise, return.
struct ETour {
  double start_arc = 0.0;
  double end_arc = 0.0;
  double length = 0.0;
};

/// Sensors spaced v*t apart along a closed tour, all moving forward at the
/// same speed.
struct DeploymentPlan {
  std::string algorithm;
  Polyline tour;  // closed
  double tour_length = 0.0;
  double speed = 0.0;
  double period = 0.0;
  std::vector<double> sensor_offsets;

  /// Curve indices swept by this tour.
  std::vector<int> curves;
  /// Connector lines joining curves inside the tour's skeleton.
  std::vector<Segment> connectors;

  // Energy-restricted plans only.
  std::optional<Point2D> energy_source;
  double battery_period = 0.0;
  std::vector<ETour> etours;
  /// Arc positions along the tour where it passes the energy source.
  std::vector<double> source_visits;

  std::map<std::string, std::string> metadata;

  std::size_t sensor_count() const { return sensor_offsets.size(); }
};

/// ceil(length / spacing), with ratios within 1e-9 of an integer snapped to
/// that integer so exact partitions are not inflated by rounding. Never less
/// than one: a zero-length tour still needs a sensor parked on it.
std::size_t sensors_for_length(double length, double spacing);

/// Offsets 0, spacing, 2*spacing, ... for `sensors_for_length` sensors.
std::vector<double> partition_offsets(double length, double spacing);

/// Fills tour length and sensor offsets for a closed tour.
DeploymentPlan make_plan(std::string algorithm, Polyline tour, double speed,
                         double period);

}  // namespace bsweep
