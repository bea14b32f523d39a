#include "bsweep/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "bsweep/multi_planner.hpp"

namespace bsweep {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Instance gen_instance(int n, std::uint64_t seed, const GenOptions& opt) {
  if (n < 1) throw std::invalid_argument("gen_instance: n must be at least 1");
  if (!(opt.region_side > 0.0) || !(opt.max_len > 0.0) || !(opt.v > 0.0) || !(opt.t > 0.0)) {
    throw std::invalid_argument("gen_instance: region, max length, v and t must be positive");
  }
  Instance inst;
  inst.region_side = opt.region_side;
  inst.v = opt.v;
  inst.t = opt.t;
  inst.seed = seed;
  std::mt19937_64 rng(seed);
  const double side = opt.region_side;
  for (int i = 0; i < n; ++i) {
    const Point2D mid{side * unit_uniform(rng), side * unit_uniform(rng)};
    const double angle = 2.0 * std::numbers::pi * unit_uniform(rng);
    const double len = opt.max_len * (1.0 - unit_uniform(rng));
    const Point2D dir{std::cos(angle), std::sin(angle)};

    double half = 0.5 * len;
    if (std::abs(dir.x) > 0.0) half = std::min(half, std::min(mid.x, side - mid.x) / std::abs(dir.x));
    if (std::abs(dir.y) > 0.0) half = std::min(half, std::min(mid.y, side - mid.y) / std::abs(dir.y));
    Point2D a = mid - half * dir;
    Point2D b = mid + half * dir;
    auto clamp = [side](Point2D p) {
      return Point2D{std::clamp(p.x, 0.0, side), std::clamp(p.y, 0.0, side)};
    };
    inst.curves.push_back(Polyline({clamp(a), clamp(b)}, false));
  }
  return inst;
}

Instance gen_energy_instance(std::uint64_t seed, const EnergyGenOptions& opt) {
  if (!(opt.region_side > 60.0)) throw std::invalid_argument("gen_energy_instance: region too small");
  Instance inst;
  inst.region_side = opt.region_side;
  inst.v = opt.v;
  inst.seed = seed;
  std::mt19937_64 rng(seed);

  const double margin = 30.0;
  const Point2D centre{margin + (opt.region_side - 2 * margin) * unit_uniform(rng),
                       margin + (opt.region_side - 2 * margin) * unit_uniform(rng)};
  const int k = 3 + static_cast<int>(unit_uniform(rng) * 6.0);
  std::vector<double> angles;
  for (int i = 0; i < k; ++i) angles.push_back(2.0 * std::numbers::pi * unit_uniform(rng));
  std::sort(angles.begin(), angles.end());
  std::vector<Point2D> verts;
  for (double a : angles) {
    const double r = 5.0 + 25.0 * unit_uniform(rng);
    verts.push_back(centre + r * Point2D{std::cos(a), std::sin(a)});
  }
  const Point2D e = centre + Point2D{10.0 * unit_uniform(rng) - 5.0, 10.0 * unit_uniform(rng) - 5.0};

  double farthest = 0.0;
  for (const auto& p : verts) farthest = std::max(farthest, distance(e, p));
  const double stretch = 1.05 + unit_uniform(rng);
  inst.t = 10.0 + 50.0 * unit_uniform(rng);
  inst.energy = EnergySpec{e, 2.0 * farthest * stretch / opt.v};
  inst.curves.push_back(Polyline(std::move(verts), opt.closed));
  return inst;
}

std::vector<Segment> instance_segments(const Instance& inst) {
  std::vector<Segment> out;
  for (const auto& c : inst.curves) {
    if (c.closed() || c.vertices().size() != 2) {
      throw std::invalid_argument("instance curves must all be straight segments");
    }
    out.push_back({c.vertices()[0], c.vertices()[1]});
  }
  return out;
}

std::vector<int> default_n_grid() {
  std::vector<int> g;
  for (int n = 5; n <= 135; n += 10) g.push_back(n);
  return g;
}

std::vector<double> default_t_grid() {
  std::vector<double> g;
  for (int t = 50; t <= 150; t += 10) g.push_back(t);
  return g;
}

namespace {

struct TrialCounts {
  std::size_t bscmc = 0;
  std::size_t special = 0;
};

TrialCounts run_trial(int n, double t, std::uint64_t seed, const GenOptions& gen) {
  GenOptions g = gen;
  g.t = t;
  const Instance inst = gen_instance(n, seed, g);
  TrialCounts c;
  c.special = plan_special(inst.curves, inst.v, inst.t).sensor_count();
  c.bscmc = plan_bscmc(inst.curves, inst.v, inst.t).total_sensors;
  return c;
}

ExperimentRow run_row(double param, int n, double t, const TableOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("run_table: trials must be at least 1");
  std::vector<TrialCounts> counts(static_cast<std::size_t>(opt.trials));
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (int i = 0; i < opt.trials; ++i) {
    counts[static_cast<std::size_t>(i)] =
        run_trial(n, t, opt.seed0 + static_cast<std::uint64_t>(i), opt.gen);
  }
  // Integer sums make the mean independent of completion order.
  std::size_t sum_b = 0;
  std::size_t sum_s = 0;
  for (const auto& c : counts) {
    sum_b += c.bscmc;
    sum_s += c.special;
  }
  ExperimentRow row;
  row.param = param;
  row.trials = opt.trials;
  row.seed0 = opt.seed0;
  row.mean_bscmc = static_cast<double>(sum_b) / opt.trials;
  row.mean_special = static_cast<double>(sum_s) / opt.trials;
  return row;
}

}  // namespace

std::vector<ExperimentRow> run_table_n(const TableOptions& opt, const std::vector<int>& ns,
                                       double t) {
  std::vector<ExperimentRow> rows;
  for (int n : ns) rows.push_back(run_row(n, n, t, opt));
  return rows;
}

std::vector<ExperimentRow> run_table_t(const TableOptions& opt, const std::vector<double>& ts,
                                       int n) {
  std::vector<ExperimentRow> rows;
  for (double t : ts) rows.push_back(run_row(t, n, t, opt));
  return rows;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = "param,alg,mean_sensors,trials,seed0\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.10g,bscmc,%.6f,%d,%llu\n", r.param, r.mean_bscmc, r.trials,
                  static_cast<unsigned long long>(r.seed0));
    out += buf;
    std::snprintf(buf, sizeof buf, "%.10g,special,%.6f,%d,%llu\n", r.param, r.mean_special,
                  r.trials, static_cast<unsigned long long>(r.seed0));
    out += buf;
  }
  return out;
}

}  // namespace bsweep
