#include <cmath>
#include <random>

#include "bsweep/harness.hpp"
#include "bsweep/simulator.hpp"
#include "bsweep/single_planner.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bsweep;
using doctest::Approx;

namespace {

EnergyInstance segment_instance(Point2D a, Point2D b, double T, double t = 4.0) {
  return {Polyline({a, b}, false), {0, 0}, 1.0, t, T};
}

// Length of the waypoint tour measured from scratch.
double measured_length(const Polyline& closed_tour) {
  const auto& v = closed_tour.vertices();
  double len = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) len += distance(v[i], v[(i + 1) % v.size()]);
  return len;
}

}  // namespace

TEST_CASE("plan_single_curve examples") {
  const Polyline square({{0, 0}, {10, 0}, {10, 10}, {0, 10}}, true);
  const auto p = plan_single_curve(square, 1.0, 10.0);
  CHECK(p.sensor_offsets == std::vector<double>{0, 10, 20, 30});
  CHECK(p.tour_length == 40.0);

  const auto seg = plan_single_curve(Polyline({{0, 0}, {7, 0}}, false), 1.0, 2.0);
  CHECK(seg.tour_length == 14.0);
  CHECK(seg.sensor_count() == 7);
  CHECK(seg.tour.closed());

  // Pentagon-ish loop scaled to perimeter 25.
  const Polyline loop({{0, 0}, {10, 0}, {10, 2.5}, {0, 2.5}}, true);
  REQUIRE(loop.length() == 25.0);
  const auto q = plan_single_curve(loop, 2.0, 3.0);
  CHECK(q.sensor_offsets == std::vector<double>{0, 6, 12, 18, 24});
}

TEST_CASE("plan_single_curve rejects degenerate input") {
  CHECK_THROWS_AS(plan_single_curve(Polyline({{1, 1}}, true), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(plan_single_curve(Polyline({{1, 1}, {1, 1}}, false), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(plan_single_curve(Polyline({{0, 0}, {1, 0}}, false), 0, 1), std::invalid_argument);
}

TEST_CASE("decompose_e_tours: single tour when everything fits") {
  const auto inst = segment_instance({2, 0}, {8, 0}, 20.0);
  const auto tours = decompose_e_tours(inst);
  REQUIRE(tours.size() == 1);
  CHECK(tours[0].start_arc == 0.0);
  CHECK(tours[0].end_arc == 6.0);
  CHECK(tours[0].length == Approx(16.0));

  const auto apprx = concat_e_tours(tours, inst);
  CHECK(apprx.length() == Approx(16.0));
  CHECK(plan_energy_restricted(inst).sensor_count() == 4);
}

TEST_CASE("decompose_e_tours: the spec's long segment is infeasible") {
  // (16, 2) lies sqrt(260) > 12 = vT/2 from the source.
  const auto inst = segment_instance({0, 2}, {16, 2}, 24.0);
  CHECK_THROWS_AS(decompose_e_tours(inst), InfeasibleError);
  try {
    check_feasible(inst);
  } catch (const InfeasibleError& e) {
    CHECK(std::string(e.what()).rfind("infeasible: point at distance", 0) == 0);
  }
}

TEST_CASE("decompose_e_tours: two tours with one rolling merge") {
  // Segment (-8,2)-(8,2), e at the origin, vT = 24. Hand trace:
  //   h1 = 12 - d(e, a); x1 = -8 + h1
  //   h2 = h1 + 12 - d(e, (x1, 2)); merged [0, h2] fits in 24
  //   final arc [h2, 16] fits the half budget but cannot merge.
  const auto inst = segment_instance({-8, 2}, {8, 2}, 24.0);
  const double h1 = 12.0 - std::sqrt(68.0);
  const double x1 = -8.0 + h1;
  const double h2 = h1 + 12.0 - std::hypot(x1, 2.0);
  const double x2 = -8.0 + h2;
  const auto tours = decompose_e_tours(inst);
  REQUIRE(tours.size() == 2);
  CHECK(tours[0].start_arc == 0.0);
  CHECK(tours[0].end_arc == Approx(h2).epsilon(1e-12));
  CHECK(tours[0].length == Approx(std::sqrt(68.0) + h2 + std::hypot(x2, 2.0)).epsilon(1e-12));
  CHECK(tours[1].start_arc == Approx(h2).epsilon(1e-12));
  CHECK(tours[1].end_arc == 16.0);
  CHECK(tours[1].length == Approx(std::hypot(x2, 2.0) + (16.0 - h2) + std::sqrt(68.0)).epsilon(1e-12));
  // Frozen numbers from the trace above.
  CHECK(h2 == Approx(11.0611).epsilon(1e-4));
  CHECK(tours[0].length == Approx(22.9636).epsilon(1e-4));

  const auto apprx = concat_e_tours(tours, inst);
  CHECK(apprx.length() == Approx(tours[0].length + tours[1].length).epsilon(1e-12));
}

TEST_CASE("decompose_e_tours: zero-length curve") {
  EnergyInstance inst{Polyline({{3, 4}}, false), {0, 0}, 1.0, 1.0, 20.0};
  const auto tours = decompose_e_tours(inst);
  REQUIRE(tours.size() == 1);
  CHECK(tours[0].length == 10.0);
}

TEST_CASE("plan_energy_restricted: sensor count is a ceiling") {
  // APPRX = 16 exactly.
  auto exact = segment_instance({2, 0}, {8, 0}, 20.0, 16.0);
  CHECK(plan_energy_restricted(exact).sensor_count() == 1);
  auto over = segment_instance({2, 0}, {8, 0}, 20.0, 16.0 - 1e-6);
  CHECK(plan_energy_restricted(over).sensor_count() == 2);
  const auto plan = plan_energy_restricted(segment_instance({-8, 2}, {8, 2}, 24.0));
  CHECK(plan.energy_source.has_value());
  CHECK(plan.source_visits.size() == 2);
  CHECK(plan.source_visits[0] == 0.0);
  CHECK(plan.metadata.at("etour_count") == "2");
}

TEST_CASE("concat_e_tours rejects empty input") {
  CHECK_THROWS_AS(concat_e_tours({}, segment_instance({2, 0}, {8, 0}, 20.0)), std::invalid_argument);
}

TEST_CASE("property: e-tour contracts on random closed curves") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance gen = gen_energy_instance(seed);
    const EnergyInstance inst{gen.curves[0], gen.energy->e, gen.v, gen.t, gen.energy->battery_period};
    const double vT = inst.speed * inst.battery_period;
    const auto tours = decompose_e_tours(inst);
    double covered = 0.0;
    double starts = 0.0;
    for (std::size_t j = 0; j < tours.size(); ++j) {
      CHECK(tours[j].length <= vT + 1e-9);
      if (j > 0) CHECK(tours[j].start_arc == tours[j - 1].end_arc);
      covered += tours[j].end_arc - tours[j].start_arc;
      starts += distance(inst.source, arc_point(inst.curve, tours[j].start_arc));
      if (j + 1 < tours.size()) {
        const double combined = distance(inst.source, arc_point(inst.curve, tours[j].start_arc)) +
                                (tours[j + 1].end_arc - tours[j].start_arc) +
                                distance(inst.source, arc_point(inst.curve, tours[j + 1].end_arc));
        CHECK(combined > vT);
      }
    }
    CHECK(tours.front().start_arc == 0.0);
    CHECK(std::abs(covered - inst.curve.length()) <= 1e-6);
    const double apprx = measured_length(concat_e_tours(tours, inst));
    CHECK(std::abs(apprx - (covered + 2.0 * starts)) <= 1e-6 * apprx);
  }
}

TEST_CASE("property: open curves pay for both ends of every arc") {
  // The closed-curve identity |APPRX| = |C| + 2 sum d(e, i_j) needs the last
  // arc to end where the first began. On open curves it does not.
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    EnergyGenOptions opt;
    opt.closed = false;
    const Instance gen = gen_energy_instance(seed, opt);
    const EnergyInstance inst{gen.curves[0], gen.energy->e, gen.v, gen.t, gen.energy->battery_period};
    const auto tours = decompose_e_tours(inst);
    double ends = 0.0;
    for (const auto& t : tours) {
      ends += distance(inst.source, arc_point(inst.curve, t.start_arc)) +
              distance(inst.source, arc_point(inst.curve, t.end_arc));
    }
    const double apprx = measured_length(concat_e_tours(tours, inst));
    CHECK(std::abs(apprx - (inst.curve.length() + ends)) <= 1e-6 * apprx);
  }
}

TEST_CASE("property: sensor count within the 13/3 envelope") {
  for (std::uint64_t seed = 200; seed < 300; ++seed) {
    const Instance gen = gen_energy_instance(seed);
    const EnergyInstance inst{gen.curves[0], gen.energy->e, gen.v, gen.t, gen.energy->battery_period};
    const auto plan = plan_energy_restricted(inst);
    // Lower bound on the optimal tour: the curve length, and a quarter of the
    // source distances to every e-tour start and its arc trisection points.
    double special = 0.0;
    for (const auto& t : plan.etours) {
      const double span = t.end_arc - t.start_arc;
      for (double f : {0.0, 1.0 / 3.0, 2.0 / 3.0}) {
        special += distance(inst.source, arc_point(inst.curve, t.start_arc + f * span));
      }
    }
    const double lower = std::max(inst.curve.length(), 0.25 * special);
    const double vt = inst.speed * inst.period;
    CHECK(plan.sensor_count() <= static_cast<std::size_t>(std::ceil(13.0 / 3.0 * lower / vt)) + 1);
  }
}

TEST_CASE("property: single-curve count is the exact ceiling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Polyline c = testing::rand_closed_polyline(rng, {100, 100}, 1, 80);
    const double v = testing::uni(rng, 0.5, 3), t = testing::uni(rng, 1, 60);
    const auto p = plan_single_curve(c, v, t);
    CHECK(p.sensor_count() == static_cast<std::size_t>(std::ceil(c.length() / (v * t))));
    for (std::size_t i = 0; i < p.sensor_offsets.size(); ++i) {
      CHECK(p.sensor_offsets[i] == Approx(static_cast<double>(i) * v * t));
      CHECK(p.sensor_offsets[i] < p.tour_length);
    }
  }
}
