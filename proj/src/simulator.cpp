#include "bsweep/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace bsweep {

namespace {

// Tolerance for deciding that a sample point lies on a tour piece.
constexpr double kOnTourTol = 1e-6;

// Tracks the longest stretch between hits that ends at or after `warmup`.
class GapTracker {
 public:
  explicit GapTracker(double warmup) : warmup_(warmup) {}

  void hit(double time) {
    if (time >= warmup_) worst_ = std::max(worst_, time - prev_);
    prev_ = time;
  }

  double finish(double horizon) {
    worst_ = std::max(worst_, horizon - prev_);
    return worst_;
  }

 private:
  double warmup_;
  double prev_ = 0.0;
  double worst_ = 0.0;
};

std::size_t step_count(double horizon, double dt) {
  return static_cast<std::size_t>(std::floor(horizon / dt + 1e-9));
}

double circular_gap(double a, double b, double period) {
  const double d = std::abs(a - b);
  return std::min(d, period - d);
}

struct Sample {
  ArcPosition where;
  Point2D point;
};

std::vector<Sample> sample_curves(std::span<const Polyline> curves, double spacing) {
  std::vector<Sample> out;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const Polyline& curve = curves[c];
    const double len = curve.length();
    const auto pieces = static_cast<std::size_t>(std::ceil(len / spacing));
    const double step = pieces > 0 ? len / static_cast<double>(pieces) : 0.0;
    // Closed curves stop short of the full length, which is vertex 0 again.
    const std::size_t count = curve.closed() && pieces > 0 ? pieces : pieces + 1;
    for (std::size_t i = 0; i < count; ++i) {
      const double s = std::min(len, static_cast<double>(i) * step);
      out.push_back({{static_cast<int>(c), s}, arc_point(curve, s)});
    }
  }
  return out;
}

// Arc positions along `tour` at which it passes through `p`.
std::vector<double> tour_positions(const Polyline& tour, Point2D p) {
  std::vector<double> out;
  for (std::size_t i = 0; i < tour.piece_count(); ++i) {
    const Projection pr = project_onto(tour.piece(i), p);
    if (pr.distance <= kOnTourTol) out.push_back(tour.piece_start(i) + pr.param);
  }
  return out;
}

void check_sweep_inputs(std::span<const DeploymentPlan> plans, const SweepOptions& opt) {
  if (plans.empty()) throw std::invalid_argument("simulate_sweep: empty plan");
  if (!(opt.dt > 0.0) || !(opt.spacing > 0.0)) {
    throw std::invalid_argument("simulate_sweep: dt and spacing must be positive");
  }
  for (const auto& p : plans) {
    if (p.sensor_offsets.empty()) throw std::invalid_argument("simulate_sweep: plan without sensors");
    const double t = p.period;
    const double vt = p.speed * p.period;
    if (opt.horizon < 2.0 * t * (1.0 - 1e-12)) {
      throw std::invalid_argument("simulate_sweep: horizon must be at least 2t");
    }
    if (opt.dt > t / 100.0 * (1.0 + 1e-12)) {
      throw std::invalid_argument("simulate_sweep: dt must be at most t/100");
    }
    if (opt.spacing > vt / 10.0 * (1.0 + 1e-12)) {
      throw std::invalid_argument("simulate_sweep: spacing must be at most vt/10");
    }
  }
}

CoverageReport finish_report(std::vector<PointGap> gaps, double period, double dt) {
  CoverageReport r;
  r.period = period;
  r.dt = dt;
  r.slack = 2.0 * dt;
  for (const auto& g : gaps) {
    if (r.per_point_gaps.empty() || g.gap > r.max_gap) {
      r.max_gap = g.gap;
      r.worst_point = g.where;
    }
    r.per_point_gaps.push_back(g);
  }
  r.violated = r.max_gap > period + r.slack;
  return r;
}

// Phases (tau - offset) mod L at which the sensor frontier reaches a sample:
// sensor j is at tau exactly when v*time ≡ tau - o_j (mod L).
struct PlanPhases {
  double length;
  double speed;
  bool parked;  // zero-length tour: sensors never leave the point
  std::vector<double> phases;
};

bool visited_at(const std::vector<PlanPhases>& targets, double time, double radius) {
  for (const auto& t : targets) {
    if (t.phases.empty()) continue;
    if (t.parked) return true;
    const double phi = std::fmod(t.speed * time, t.length);
    const auto it = std::lower_bound(t.phases.begin(), t.phases.end(), phi);
    const double above = it == t.phases.end() ? t.phases.front() : *it;
    const double below = it == t.phases.begin() ? t.phases.back() : *(it - 1);
    if (circular_gap(phi, above, t.length) <= radius ||
        circular_gap(phi, below, t.length) <= radius) {
      return true;
    }
  }
  return false;
}

}  // namespace

CoverageReport simulate_sweep(std::span<const DeploymentPlan> plans,
                              std::span<const Polyline> curves, const SweepOptions& opt) {
  check_sweep_inputs(plans, opt);
  const double period = plans.front().period;
  const auto samples = sample_curves(curves, opt.spacing);
  const std::size_t steps = step_count(opt.horizon, opt.dt);
  const double horizon = static_cast<double>(steps) * opt.dt;
  std::vector<PointGap> gaps(samples.size());

#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(samples.size()); ++i) {
    const Sample& s = samples[static_cast<std::size_t>(i)];
    std::vector<PlanPhases> targets;
    double radius = 0.0;
    for (const auto& plan : plans) {
      PlanPhases pp{plan.tour_length, plan.speed, !(plan.tour_length > 0.0), {}};
      radius = std::max(radius, plan.speed * opt.dt);
      for (double tau : tour_positions(plan.tour, s.point)) {
        for (double o : plan.sensor_offsets) {
          double ph = pp.parked ? 0.0 : std::fmod(tau - o, pp.length);
          if (ph < 0.0) ph += pp.length;
          pp.phases.push_back(ph);
        }
      }
      std::sort(pp.phases.begin(), pp.phases.end());
      targets.push_back(std::move(pp));
    }
    GapTracker tracker(period);
    for (std::size_t n = 0; n <= steps; ++n) {
      const double time = static_cast<double>(n) * opt.dt;
      if (visited_at(targets, time, radius * (1.0 + 1e-12))) tracker.hit(time);
    }
    gaps[static_cast<std::size_t>(i)] = {s.where, tracker.finish(horizon)};
  }
  return finish_report(std::move(gaps), period, opt.dt);
}

CoverageReport simulate_sweep_serial(std::span<const DeploymentPlan> plans,
                                     std::span<const Polyline> curves,
                                     const SweepOptions& opt) {
  check_sweep_inputs(plans, opt);
  const double period = plans.front().period;
  const auto samples = sample_curves(curves, opt.spacing);
  const std::size_t steps = step_count(opt.horizon, opt.dt);
  const double horizon = static_cast<double>(steps) * opt.dt;

  // positions[sample][plan] -> tour arc positions through the sample
  std::vector<std::vector<std::vector<double>>> positions(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (const auto& plan : plans) positions[i].push_back(tour_positions(plan.tour, samples[i].point));
  }
  std::vector<GapTracker> trackers(samples.size(), GapTracker(period));
  for (std::size_t n = 0; n <= steps; ++n) {
    const double time = static_cast<double>(n) * opt.dt;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      bool seen = false;
      for (std::size_t p = 0; p < plans.size() && !seen; ++p) {
        const DeploymentPlan& plan = plans[p];
        const double radius = plan.speed * opt.dt * (1.0 + 1e-12);
        for (double o : plan.sensor_offsets) {
          for (double tau : positions[i][p]) {
            if (!(plan.tour_length > 0.0)) {
              seen = true;
              break;
            }
            const double pos = std::fmod(o + plan.speed * time, plan.tour_length);
            if (circular_gap(pos, tau, plan.tour_length) <= radius) {
              seen = true;
              break;
            }
          }
          if (seen) break;
        }
      }
      if (seen) trackers[i].hit(time);
    }
  }
  std::vector<PointGap> gaps;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    gaps.push_back({samples[i].where, trackers[i].finish(horizon)});
  }
  return finish_report(std::move(gaps), period, opt.dt);
}

CoverageReport simulate_sweep(const DeploymentPlan& plan, std::span<const Polyline> curves,
                              const SweepOptions& opt) {
  return simulate_sweep(std::span<const DeploymentPlan>(&plan, 1), curves, opt);
}

CoverageReport simulate_sweep(const MultiDeploymentPlan& plan,
                              std::span<const Polyline> curves, const SweepOptions& opt) {
  return simulate_sweep(std::span<const DeploymentPlan>(plan.components), curves, opt);
}

RechargeReport simulate_energy(const DeploymentPlan& plan, Point2D e, double battery_period,
                               double horizon, double dt) {
  if (!plan.energy_source) {
    throw std::invalid_argument("simulate_energy: plan carries no energy-source metadata");
  }
  if (!(dt > 0.0) || !(horizon > 0.0) || !(battery_period > 0.0)) {
    throw std::invalid_argument("simulate_energy: horizon, dt and T must be positive");
  }
  if (plan.sensor_offsets.empty()) throw std::invalid_argument("simulate_energy: plan without sensors");
  const std::size_t steps = step_count(horizon, dt);
  const double end = static_cast<double>(steps) * dt;
  const double radius = plan.speed * dt * (1.0 + 1e-12);

  RechargeReport r;
  r.battery_period = battery_period;
  r.dt = dt;
  r.slack = 2.0 * dt;
  r.per_sensor_max_gap.assign(plan.sensor_offsets.size(), 0.0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(plan.sensor_offsets.size()); ++j) {
    const double offset = plan.sensor_offsets[static_cast<std::size_t>(j)];
    // The battery is full at time 0, so the first stretch counts too.
    GapTracker tracker(0.0);
    for (std::size_t n = 0; n <= steps; ++n) {
      const double time = static_cast<double>(n) * dt;
      const Point2D p = arc_point(plan.tour, offset + plan.speed * time);
      if (distance(p, e) <= radius) tracker.hit(time);
    }
    r.per_sensor_max_gap[static_cast<std::size_t>(j)] = tracker.finish(end);
  }
  r.max_gap = *std::max_element(r.per_sensor_max_gap.begin(), r.per_sensor_max_gap.end());
  r.violated = r.max_gap > battery_period + r.slack;
  return r;
}

// ---------------------------------------------------------------------------
// Data mules

const char* to_string(SensorStrategy::Kind kind) {
  switch (kind) {
    case SensorStrategy::Kind::Stationary: return "stationary";
    case SensorStrategy::Kind::RandomWalk: return "random-walk";
    case SensorStrategy::Kind::Bounce: return "bounce";
    case SensorStrategy::Kind::Evader: return "evader";
  }
  return "unknown";
}

SensorStrategy::Kind strategy_kind_from_string(const std::string& name) {
  if (name == "stationary") return SensorStrategy::Kind::Stationary;
  if (name == "random-walk" || name == "random_walk") return SensorStrategy::Kind::RandomWalk;
  if (name == "bounce") return SensorStrategy::Kind::Bounce;
  if (name == "evader") return SensorStrategy::Kind::Evader;
  throw std::invalid_argument("unknown sensor strategy '" + name + "'");
}

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// One sensor's motion along its segment.
//
// The evader trigger carries a relative tolerance far above the meeting
// radius tolerance. On a time lattice the chase distance can land exactly on
// 2*v*dt; without the slack a rounding miss lets it close to v*dt, which is
// the meeting radius.
class SensorMotion {
 public:
  SensorMotion(const Segment& seg, const SensorStrategy& strat, double mule_speed, double dt)
      : seg_(seg), strat_(strat), len_(seg.length()), dt_(dt),
        trigger_(2.0 * mule_speed * dt * (1.0 + 1e-6)), rng_(strat.seed) {
    s_ = std::clamp(strat.param, 0.0, len_);
    if (strat.kind == SensorStrategy::Kind::RandomWalk) {
      vel_ = (2.0 * unit_uniform(rng_) - 1.0) * strat.speed;
    }
    if (len_ > 0.0) dir_ = (1.0 / len_) * (seg.b - seg.a);
  }

  Point2D position() const { return seg_.point_at(s_); }

  /// Advances one step given the mule positions at the current step.
  void advance(std::span<const Point2D> mules) {
    const double stride = strat_.speed * dt_;
    switch (strat_.kind) {
      case SensorStrategy::Kind::Stationary:
        return;
      case SensorStrategy::Kind::Bounce:
        s_ += heading_ * stride;
        reflect(heading_);
        return;
      case SensorStrategy::Kind::RandomWalk:
        if (unit_uniform(rng_) < 0.1) vel_ = (2.0 * unit_uniform(rng_) - 1.0) * strat_.speed;
        s_ += vel_ * dt_;
        reflect(vel_);
        return;
      case SensorStrategy::Kind::Evader: {
        const Point2D here = position();
        double nearest = std::numeric_limits<double>::infinity();
        Point2D threat{};
        for (const auto& m : mules) {
          const double d = distance(here, m);
          if (d < nearest) {
            nearest = d;
            threat = m;
          }
        }
        if (nearest > trigger_) return;
        const double toward = dot(threat - here, dir_);
        if (toward > 1e-12) s_ -= stride;
        else if (toward < -1e-12) s_ += stride;
        s_ = std::clamp(s_, 0.0, len_);
        return;
      }
    }
  }

 private:
  void reflect(double& heading) {
    if (len_ <= 0.0) {
      s_ = 0.0;
      return;
    }
    if (s_ > len_) {
      s_ = std::max(0.0, 2.0 * len_ - s_);
      heading = -heading;
    } else if (s_ < 0.0) {
      s_ = std::min(len_, -s_);
      heading = -heading;
    }
  }

  Segment seg_;
  SensorStrategy strat_;
  double len_;
  double dt_;
  double trigger_;
  std::mt19937_64 rng_;
  Point2D dir_{};
  double s_ = 0.0;
  double vel_ = 0.0;
  double heading_ = 1.0;
};

// Minimum distance between two points moving linearly from (p0, q0) to
// (p1, q1) over one step.
double swept_distance(Point2D p0, Point2D p1, Point2D q0, Point2D q1) {
  const Point2D d0 = q0 - p0;
  const Point2D dd = (q1 - p1) - d0;
  const double denom = dot(dd, dd);
  double s = 0.0;
  if (denom > 0.0) s = std::clamp(-dot(d0, dd) / denom, 0.0, 1.0);
  return norm(d0 + s * dd);
}

struct MuleSetup {
  std::vector<double> offsets;
  std::vector<double> direction;  // +1 forward, -1 backward
};

MuleSetup mule_setup(const DataMulePlan& plan, bool both) {
  MuleSetup m;
  for (double o : plan.offsets) {
    m.offsets.push_back(o);
    m.direction.push_back(1.0);
  }
  if (both) {
    for (double o : plan.offsets) {
      m.offsets.push_back(o);
      m.direction.push_back(-1.0);
    }
  }
  return m;
}

Point2D mule_position(const DataMulePlan& plan, const MuleSetup& m, std::size_t i, double time) {
  return arc_point(plan.tour, m.offsets[i] + m.direction[i] * plan.speed * time);
}

void check_meeting_inputs(const DataMulePlan& plan, std::span<const Segment> segments,
                          std::span<const SensorStrategy> strategies, const MeetingOptions& opt) {
  if (segments.size() != strategies.size()) {
    throw std::invalid_argument("simulate_mdmdg: " + std::to_string(strategies.size()) +
                                " strategies for " + std::to_string(segments.size()) + " segments");
  }
  if (!(opt.dt > 0.0) || !(opt.horizon > 0.0)) {
    throw std::invalid_argument("simulate_mdmdg: horizon and dt must be positive");
  }
  if (plan.offsets.empty()) throw std::invalid_argument("simulate_mdmdg: plan without mules");
  for (const auto& s : strategies) {
    if (s.speed < 0.0) throw std::invalid_argument("simulate_mdmdg: negative sensor speed");
  }
}

MeetingReport finish_meeting(std::vector<double> gaps, const DataMulePlan& plan, double dt) {
  MeetingReport r;
  r.period = plan.period;
  r.dt = dt;
  r.slack = 2.0 * dt;
  r.per_sensor_max_gap = std::move(gaps);
  if (!r.per_sensor_max_gap.empty()) {
    r.max_gap = *std::max_element(r.per_sensor_max_gap.begin(), r.per_sensor_max_gap.end());
  }
  r.violated = r.max_gap > plan.period + r.slack;
  return r;
}

// Runs one sensor against precomputed or on-the-fly mule positions.
template <typename MuleAt>
double run_sensor(const DataMulePlan& plan, const Segment& seg, const SensorStrategy& strat,
                  std::size_t steps, double dt, double radius, std::size_t mules,
                  MuleAt&& mule_at) {
  SensorMotion motion(seg, strat, plan.speed, dt);
  GapTracker tracker(plan.period);
  std::vector<Point2D> now(mules);
  std::vector<Point2D> next(mules);
  for (std::size_t m = 0; m < mules; ++m) now[m] = mule_at(0, m);

  Point2D here = motion.position();
  for (std::size_t m = 0; m < mules; ++m) {
    if (distance(here, now[m]) <= radius) {
      tracker.hit(0.0);
      break;
    }
  }
  for (std::size_t n = 0; n < steps; ++n) {
    motion.advance(now);
    const Point2D there = motion.position();
    for (std::size_t m = 0; m < mules; ++m) next[m] = mule_at(n + 1, m);
    for (std::size_t m = 0; m < mules; ++m) {
      if (swept_distance(here, there, now[m], next[m]) <= radius) {
        tracker.hit(static_cast<double>(n + 1) * dt);
        break;
      }
    }
    here = there;
    std::swap(now, next);
  }
  return tracker.finish(static_cast<double>(steps) * dt);
}

}  // namespace

MeetingReport simulate_mdmdg(const DataMulePlan& plan, std::span<const Segment> segments,
                             std::span<const SensorStrategy> strategies,
                             const MeetingOptions& opt) {
  check_meeting_inputs(plan, segments, strategies, opt);
  const std::size_t steps = step_count(opt.horizon, opt.dt);
  const double radius = (opt.meet_radius > 0.0 ? opt.meet_radius : plan.speed * opt.dt) * (1.0 + 1e-12);
  const MuleSetup setup = mule_setup(plan, opt.both_fleets);
  const std::size_t mules = setup.offsets.size();

  // Mule trajectories are shared by every sensor; tabulate them once.
  std::vector<Point2D> table((steps + 1) * mules);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n <= static_cast<std::ptrdiff_t>(steps); ++n) {
    for (std::size_t m = 0; m < mules; ++m) {
      table[static_cast<std::size_t>(n) * mules + m] =
          mule_position(plan, setup, m, static_cast<double>(n) * opt.dt);
    }
  }

  std::vector<double> gaps(segments.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(segments.size()); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    gaps[idx] = run_sensor(plan, segments[idx], strategies[idx], steps, opt.dt, radius, mules,
                           [&](std::size_t n, std::size_t m) { return table[n * mules + m]; });
  }
  return finish_meeting(std::move(gaps), plan, opt.dt);
}

MeetingReport simulate_mdmdg_serial(const DataMulePlan& plan, std::span<const Segment> segments,
                                    std::span<const SensorStrategy> strategies,
                                    const MeetingOptions& opt) {
  check_meeting_inputs(plan, segments, strategies, opt);
  const std::size_t steps = step_count(opt.horizon, opt.dt);
  const double radius = (opt.meet_radius > 0.0 ? opt.meet_radius : plan.speed * opt.dt) * (1.0 + 1e-12);
  const MuleSetup setup = mule_setup(plan, opt.both_fleets);
  const std::size_t mules = setup.offsets.size();
  std::vector<double> gaps;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    gaps.push_back(run_sensor(plan, segments[i], strategies[i], steps, opt.dt, radius, mules,
                              [&](std::size_t n, std::size_t m) {
                                return mule_position(plan, setup, m, static_cast<double>(n) * opt.dt);
                              }));
  }
  return finish_meeting(std::move(gaps), plan, opt.dt);
}

}  // namespace bsweep
