#include "bsweep/plan.hpp"

#include <cmath>
#include <stdexcept>

namespace bsweep {

std::size_t sensors_for_length(double length, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("sensor spacing must be positive");
  if (!(length > 0.0)) return 1;
  const double ratio = length / spacing;
  const double nearest = std::round(ratio);
  if (nearest >= 1.0 && std::abs(ratio - nearest) <= 1e-9 * nearest) {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::ceil(ratio));
}

std::vector<double> partition_offsets(double length, double spacing) {
  const std::size_t count = sensors_for_length(length, spacing);
  std::vector<double> offsets(count);
  for (std::size_t i = 0; i < count; ++i) offsets[i] = static_cast<double>(i) * spacing;
  return offsets;
}

DeploymentPlan make_plan(std::string algorithm, Polyline tour, double speed,
                         double period) {
  if (!(speed > 0.0) || !(period > 0.0)) {
    throw std::invalid_argument("speed and period must be positive");
  }
  DeploymentPlan plan;
  plan.algorithm = std::move(algorithm);
  plan.tour_length = tour.length();
  plan.tour = std::move(tour);
  plan.speed = speed;
  plan.period = period;
  plan.sensor_offsets = partition_offsets(plan.tour_length, speed * period);
  return plan;
}

}  // namespace bsweep
