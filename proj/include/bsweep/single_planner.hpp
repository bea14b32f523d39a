#pragma once

// Sweep plans for a single curve: the optimal unrestricted plan and the
// energy-restricted plan built from e-tours.

#include <stdexcept>
#include <string>
#include <vector>

#include "bsweep/geometry.hpp"
#include "bsweep/plan.hpp"

namespace bsweep {

/// Raised when an energy instance violates the distance precondition.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnergyInstance {
  Polyline curve;
  Point2D source;
  double speed = 1.0;
  double period = 1.0;          // sweep period t
  double battery_period = 1.0;  // T

  /// Every point must lie strictly closer than vT/2 minus this margin.
  double feasibility_margin() const { return 1e-6 * speed * battery_period; }
};

/// Throws InfeasibleError naming the farthest point when some point of the
/// curve is at distance >= vT/2 - margin from the source.
void check_feasible(const EnergyInstance& inst);

/// Optimal plan: ceil(|C| / vt) sensors evenly spaced along the curve,
/// which is first closed with a chord when open.
DeploymentPlan plan_single_curve(const Polyline& curve, double speed,
                                 double period);

/// Greedy e-tour decomposition. Starting at vertex 0, each step reaches as
/// far along the curve as the budget vT/2 - d(e, i) allows (or to the end of
/// the curve when that fits), then tries to fold the new arc into the
/// previous e-tour while the merged loop stays within vT.
std::vector<ETour> decompose_e_tours(const EnergyInstance& inst);

/// Concatenation e, arc_1, e, arc_2, ..., as a closed waypoint tour.
Polyline concat_e_tours(const std::vector<ETour>& etours,
                        const EnergyInstance& inst);

DeploymentPlan plan_energy_restricted(const EnergyInstance& inst);

}  // namespace bsweep
