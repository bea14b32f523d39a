#include "bsweep/single_planner.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace bsweep {

namespace {

void validate_rates(double speed, double period) {
  if (!(speed > 0.0) || !(period > 0.0) || !std::isfinite(speed) || !std::isfinite(period)) {
    throw std::invalid_argument("speed and period must be positive and finite");
  }
}

std::string format_distance(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", d);
  return buf;
}

}  // namespace

void check_feasible(const EnergyInstance& inst) {
  if (inst.curve.empty()) throw std::invalid_argument("energy instance: empty curve");
  validate_rates(inst.speed, inst.period);
  if (!(inst.battery_period > 0.0)) {
    throw std::invalid_argument("energy instance: battery period must be positive");
  }
  // Distance to a fixed point is convex along each straight piece, so the
  // farthest curve point is a vertex.
  double farthest = 0.0;
  Point2D where = inst.curve.vertices().front();
  for (const auto& v : inst.curve.vertices()) {
    const double d = distance(inst.source, v);
    if (d > farthest) {
      farthest = d;
      where = v;
    }
  }
  const double half = 0.5 * inst.speed * inst.battery_period;
  if (farthest >= half - inst.feasibility_margin()) {
    throw InfeasibleError("infeasible: point at distance " + format_distance(farthest) +
                          " ≥ vT/2 = " + format_distance(half) + " (point " +
                          format_distance(where.x) + "," + format_distance(where.y) + ")");
  }
}

DeploymentPlan plan_single_curve(const Polyline& curve, double speed, double period) {
  validate_rates(speed, period);
  if (curve.empty() || !(curve.length() > 0.0)) {
    throw std::invalid_argument("plan_single_curve: curve has zero length");
  }
  // An open curve is closed by the chord joining its end points.
  Polyline tour = curve.closed() ? curve : Polyline(curve.vertices(), true);
  DeploymentPlan plan = make_plan("single", std::move(tour), speed, period);
  plan.curves = {0};
  return plan;
}

std::vector<ETour> decompose_e_tours(const EnergyInstance& inst) {
  check_feasible(inst);
  const Polyline& curve = inst.curve;
  const Point2D e = inst.source;
  const double budget_total = inst.speed * inst.battery_period;
  const double half = 0.5 * budget_total;
  const double end = curve.length();
  const double progress_floor = 1e-9 * budget_total;

  auto reach = [&](double s) { return distance(e, arc_point(curve, s)); };

  std::vector<ETour> tours;
  if (end <= 0.0) {
    tours.push_back({0.0, 0.0, 2.0 * reach(0.0)});
    return tours;
  }

  double cursor = 0.0;
  while (end - cursor > kGeomTol) {
    const double here = reach(cursor);
    double h;
    if (here + (end - cursor) <= half) {
      h = end;
    } else {
      const double budget = half - here;
      if (budget <= progress_floor) {
        throw InfeasibleError("infeasible: no arc progress possible at distance " +
                              format_distance(here) + " from the source");
      }
      h = cursor + budget;
      if (end - h <= kGeomTol) h = end;
    }
    const double back = reach(h);
    if (!tours.empty()) {
      ETour& prev = tours.back();
      const double merged = reach(prev.start_arc) + (h - prev.start_arc) + back;
      if (merged <= budget_total) {
        prev.end_arc = h;
        prev.length = merged;
        cursor = h;
        continue;
      }
    }
    tours.push_back({cursor, h, here + (h - cursor) + back});
    cursor = h;
  }
  return tours;
}

namespace {

struct ConcatResult {
  Polyline tour;
  std::vector<double> source_visits;
};

ConcatResult concat_with_visits(const std::vector<ETour>& etours, const EnergyInstance& inst) {
  if (etours.empty()) throw std::invalid_argument("concat_e_tours: no e-tours");
  std::vector<Point2D> pts;
  std::vector<std::size_t> source_index;
  for (const auto& et : etours) {
    source_index.push_back(pts.size());
    pts.push_back(inst.source);
    const auto arc = arc_waypoints(inst.curve, et.start_arc, et.end_arc);
    pts.insert(pts.end(), arc.begin(), arc.end());
  }
  ConcatResult out{Polyline(std::move(pts), true), {}};
  for (std::size_t idx : source_index) {
    out.source_visits.push_back(out.tour.cumulative()[idx]);
  }
  return out;
}

}  // namespace

Polyline concat_e_tours(const std::vector<ETour>& etours, const EnergyInstance& inst) {
  return concat_with_visits(etours, inst).tour;
}

DeploymentPlan plan_energy_restricted(const EnergyInstance& inst) {
  auto etours = decompose_e_tours(inst);
  auto concat = concat_with_visits(etours, inst);
  DeploymentPlan plan = make_plan("energy", std::move(concat.tour), inst.speed, inst.period);
  plan.curves = {0};
  plan.energy_source = inst.source;
  plan.battery_period = inst.battery_period;
  plan.source_visits = std::move(concat.source_visits);
  plan.metadata["etour_count"] = std::to_string(etours.size());
  plan.etours = std::move(etours);
  return plan;
}

}  // namespace bsweep
