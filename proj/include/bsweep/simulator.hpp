#pragma once

// Discrete-time verification of plans.
//
// Every check steps time by `dt` from 0 to `horizon` and records the
// instants at which a contract is met (a curve point visited, a sensor
// back at the energy source, a mule meeting a sensor). The reported gap is
// the longest stretch without such an instant that ends at or after one
// period t, so start-up stretches shorter than t never count. Violations
// use the slack Δ = 2·dt.
//
// The sweep and meeting checks are data-parallel (OpenMP over sample points
// and sensors). `*_serial` variants are straightforward single-threaded
// formulations kept as references for the kernels.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsweep/datamule.hpp"
#include "bsweep/geometry.hpp"
#include "bsweep/multi_planner.hpp"
#include "bsweep/plan.hpp"

namespace bsweep {

struct ArcPosition {
  int curve = 0;
  double arc = 0.0;
};

struct PointGap {
  ArcPosition where;
  double gap = 0.0;
};

struct CoverageReport {
  double max_gap = 0.0;
  ArcPosition worst_point;
  std::vector<PointGap> per_point_gaps;
  bool violated = false;
  double period = 0.0;
  double dt = 0.0;
  double slack = 0.0;
};

struct SweepOptions {
  double horizon = 0.0;
  double dt = 0.0;
  double spacing = 0.0;
};

/// Samples every curve at `spacing` and records, per sample, the longest
/// stretch during which no sensor passed within v·dt of it along its tour.
/// Requires horizon >= 2t, dt <= t/100, spacing <= vt/10.
CoverageReport simulate_sweep(std::span<const DeploymentPlan> plans,
                              std::span<const Polyline> curves,
                              const SweepOptions& opt);
CoverageReport simulate_sweep(const DeploymentPlan& plan,
                              std::span<const Polyline> curves,
                              const SweepOptions& opt);
CoverageReport simulate_sweep(const MultiDeploymentPlan& plan,
                              std::span<const Polyline> curves,
                              const SweepOptions& opt);
CoverageReport simulate_sweep_serial(std::span<const DeploymentPlan> plans,
                                     std::span<const Polyline> curves,
                                     const SweepOptions& opt);

struct RechargeReport {
  std::vector<double> per_sensor_max_gap;
  double max_gap = 0.0;
  bool violated = false;
  double battery_period = 0.0;
  double dt = 0.0;
  double slack = 0.0;
};

/// Longest stretch each sensor spends away from the energy source `e`
/// (arrival = within v·dt of `e`). Requires an energy-restricted plan.
RechargeReport simulate_energy(const DeploymentPlan& plan, Point2D e,
                               double battery_period, double horizon, double dt);

struct SensorStrategy {
  enum class Kind { Stationary, RandomWalk, Bounce, Evader };
  Kind kind = Kind::Stationary;
  /// Start position, arc length from the segment's first end point.
  double param = 0.0;
  double speed = 0.0;
  std::uint64_t seed = 0;
};

const char* to_string(SensorStrategy::Kind kind);
SensorStrategy::Kind strategy_kind_from_string(const std::string& name);

struct MeetingReport {
  std::vector<double> per_sensor_max_gap;
  double max_gap = 0.0;
  bool violated = false;
  double period = 0.0;
  double dt = 0.0;
  double slack = 0.0;
};

struct MeetingOptions {
  double horizon = 0.0;
  double dt = 0.0;
  /// <= 0 selects v·dt.
  double meet_radius = 0.0;
  /// false keeps only the forward fleet (ablation).
  bool both_fleets = true;
};

/// A mule meets a sensor when their distance, with both moving linearly
/// across a step, drops to `meet_radius` or below.
MeetingReport simulate_mdmdg(const DataMulePlan& plan,
                             std::span<const Segment> segments,
                             std::span<const SensorStrategy> strategies,
                             const MeetingOptions& opt);
MeetingReport simulate_mdmdg_serial(const DataMulePlan& plan,
                                    std::span<const Segment> segments,
                                    std::span<const SensorStrategy> strategies,
                                    const MeetingOptions& opt);

/// Largest segment count accepted by `tour_oracle`.
inline constexpr std::size_t kTourOracleLimit = 8;

/// Shortest closed tour that traverses every segment end to end, over all
/// segment orders and orientations. Upper-bounds the optimal tour that
/// visits every segment point.
double tour_oracle(std::span<const Segment> segments);

}  // namespace bsweep
