#pragma once

// Random instances and the two experiment tables (sensor counts of the
// single-tour planner and BSCMC, varying n or t).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bsweep/geometry.hpp"

namespace bsweep {

struct EnergySpec {
  Point2D e;
  double battery_period = 0.0;  // T
};

struct Instance {
  int version = 1;
  double region_side = 200.0;
  double v = 1.0;
  double t = 50.0;
  std::optional<EnergySpec> energy;
  std::vector<Polyline> curves;
  std::uint64_t seed = 0;
};

/// Uniform double in [0, 1) built from the top 53 bits of one draw, so the
/// stream is identical on every platform.
double unit_uniform(std::mt19937_64& rng);

struct GenOptions {
  double region_side = 200.0;
  double max_len = 5.0;
  double v = 1.0;
  double t = 50.0;
};

/// n straight segments: midpoint uniform in the square, direction uniform in
/// [0, 2π), length uniform in (0, max_len], then shortened symmetrically
/// about the midpoint until both end points lie inside the square.
Instance gen_instance(int n, std::uint64_t seed, const GenOptions& opt = {});

struct EnergyGenOptions {
  double region_side = 200.0;
  double v = 1.0;
  bool closed = true;
};

/// One star-shaped polyline (3 to 8 vertices, radius 5 to 30 m) with an
/// energy source near its centre and a battery period T chosen so that every
/// point is strictly closer than vT/2 to the source. The sweep period t is
/// uniform in [10, 60].
Instance gen_energy_instance(std::uint64_t seed, const EnergyGenOptions& opt = {});

/// The curves of `inst` as segments; throws unless each curve is an open
/// two-vertex polyline.
std::vector<Segment> instance_segments(const Instance& inst);

struct ExperimentRow {
  double param = 0.0;
  double mean_bscmc = 0.0;
  double mean_special = 0.0;
  int trials = 0;
  std::uint64_t seed0 = 0;
};

struct TableOptions {
  int trials = 100;
  std::uint64_t seed0 = 1;
  bool parallel = true;
  GenOptions gen;
};

std::vector<int> default_n_grid();     // 5, 15, ..., 135
std::vector<double> default_t_grid();  // 50, 60, ..., 150

/// Mean sensor counts per n at sweep period `t`. Trial i uses seed seed0 + i.
std::vector<ExperimentRow> run_table_n(const TableOptions& opt,
                                       const std::vector<int>& ns = default_n_grid(),
                                       double t = 50.0);

/// Mean sensor counts per t with n segments. Trial i uses seed seed0 + i.
std::vector<ExperimentRow> run_table_t(const TableOptions& opt,
                                       const std::vector<double>& ts = default_t_grid(),
                                       int n = 50);

/// Header `param,alg,mean_sensors,trials,seed0`, two lines per row.
std::string rows_to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace bsweep
