#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bsweep/datamule.hpp"
#include "bsweep/harness.hpp"
#include "bsweep/io.hpp"
#include "bsweep/multi_planner.hpp"
#include "bsweep/simulator.hpp"
#include "bsweep/single_planner.hpp"
#include "bsweep/svg.hpp"

namespace bsweep::cli {

namespace {

struct Config {
  // gen
  int n = 5;
  std::uint64_t seed = 1;
  double t = 50.0;
  double v = 1.0;
  double region = 200.0;
  double max_len = 5.0;
  std::string kind = "segments";
  // plan
  std::string alg;
  // simulate
  std::string check;
  std::string strategy = "stationary";
  double dt = 0.0;
  double horizon = 0.0;
  double spacing = 0.0;
  double meet_radius = 0.0;
  double sensor_speed = -1.0;
  bool single_fleet = false;
  // bench
  std::string table;
  int trials = 100;
  bool serial = false;
  // files
  std::string input;
  std::string plan;
  std::string output;
};

class Emitter {
 public:
  Emitter(const std::string& path, std::ostream& out) : path_(path), out_(out) {}
  void operator()(const std::string& text) const {
    if (path_.empty()) out_ << text;
    else write_text_file(path_, text);
  }

 private:
  const std::string& path_;
  std::ostream& out_;
};

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
}

int cmd_gen(const Config& c, std::ostream& out) {
  Instance inst;
  if (c.kind == "segments") {
    if (c.n < 1) throw std::invalid_argument("--n must be at least 1");
    GenOptions g;
    g.region_side = c.region;
    g.max_len = c.max_len;
    g.v = c.v;
    g.t = c.t;
    inst = gen_instance(c.n, c.seed, g);
  } else {
    EnergyGenOptions g;
    g.region_side = c.region;
    g.v = c.v;
    inst = gen_energy_instance(c.seed, g);
  }
  Emitter(c.output, out)(instance_to_json(inst));
  return kExitOk;
}

const Polyline& only_curve(const Instance& inst, const std::string& alg) {
  if (inst.curves.size() != 1) {
    throw std::invalid_argument("--alg " + alg + " needs an instance with exactly one curve, got " +
                                std::to_string(inst.curves.size()));
  }
  return inst.curves.front();
}

int cmd_plan(const Config& c, std::ostream& out) {
  const Instance inst = instance_from_json(read_text_file(c.input));
  AnyPlan plan;
  if (c.alg == "single") {
    plan = plan_single_curve(only_curve(inst, c.alg), inst.v, inst.t);
  } else if (c.alg == "energy") {
    if (!inst.energy) throw std::invalid_argument("--alg energy needs an instance with an energy source");
    EnergyInstance e{only_curve(inst, c.alg), inst.energy->e, inst.v, inst.t, inst.energy->battery_period};
    plan = plan_energy_restricted(e);
  } else if (c.alg == "special") {
    plan = plan_special(inst.curves, inst.v, inst.t);
  } else if (c.alg == "bscmc") {
    plan = plan_bscmc(inst.curves, inst.v, inst.t);
  } else {
    plan = plan_mdmdg(instance_segments(inst), inst.v, inst.t);
  }
  Emitter(c.output, out)(plan_to_json(plan));
  return kExitOk;
}

std::vector<SensorStrategy> strategies_for(const Config& c, std::span<const Segment> segs, double v) {
  const double speed = c.sensor_speed < 0.0 ? v : c.sensor_speed;
  if (speed > v * (1.0 + 1e-12)) throw std::invalid_argument("--sensor-speed must not exceed v");
  std::vector<SensorStrategy> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    SensorStrategy s;
    s.kind = strategy_kind_from_string(c.strategy);
    s.param = 0.5 * segs[i].length();
    s.speed = s.kind == SensorStrategy::Kind::Stationary ? 0.0 : speed;
    s.seed = c.seed + i;
    out.push_back(s);
  }
  return out;
}

int cmd_simulate(const Config& c, std::ostream& out, std::ostream& err) {
  const Instance inst = instance_from_json(read_text_file(c.input));
  const AnyPlan plan = plan_from_json(read_text_file(c.plan));
  const Emitter emit(c.output, out);
  bool violated = false;
  std::string summary;

  if (c.check == "sweep") {
    std::vector<DeploymentPlan> parts;
    if (const auto* p = std::get_if<DeploymentPlan>(&plan)) parts.push_back(*p);
    else if (const auto* m = std::get_if<MultiDeploymentPlan>(&plan)) parts = m->components;
    else throw std::invalid_argument("--check sweep needs a sensor plan, not a data-mule plan");
    const double t = parts.front().period;
    const double vt = parts.front().speed * t;
    SweepOptions opt{c.horizon > 0.0 ? c.horizon : 3.0 * t, c.dt > 0.0 ? c.dt : t / 1000.0,
                     c.spacing > 0.0 ? c.spacing : vt / 100.0};
    const CoverageReport r = simulate_sweep(parts, inst.curves, opt);
    violated = r.violated;
    summary = "sweep max_gap=" + std::to_string(r.max_gap) + " period=" + std::to_string(r.period);
    emit(report_to_json(r));
  } else if (c.check == "energy") {
    const auto* p = std::get_if<DeploymentPlan>(&plan);
    if (!p || !p->energy_source) throw std::invalid_argument("--check energy needs an energy-restricted plan");
    const double T = p->battery_period;
    const double dt = c.dt > 0.0 ? c.dt : std::min(p->period, T) / 1000.0;
    const double horizon = c.horizon > 0.0 ? c.horizon : 3.0 * std::max(p->period, T);
    const RechargeReport r = simulate_energy(*p, *p->energy_source, T, horizon, dt);
    violated = r.violated;
    summary = "energy max_gap=" + std::to_string(r.max_gap) + " T=" + std::to_string(T);
    emit(report_to_json(r));
  } else {
    const auto* p = std::get_if<DataMulePlan>(&plan);
    if (!p) throw std::invalid_argument("--check mdmdg needs a data-mule plan");
    const auto segs = instance_segments(inst);
    const auto strategies = strategies_for(c, segs, p->speed);
    MeetingOptions opt;
    opt.horizon = c.horizon > 0.0 ? c.horizon : 3.0 * p->period;
    opt.dt = c.dt > 0.0 ? c.dt : p->period / 1000.0;
    opt.meet_radius = c.meet_radius;
    opt.both_fleets = !c.single_fleet;
    const MeetingReport r = simulate_mdmdg(*p, segs, strategies, opt);
    violated = r.violated;
    summary = "mdmdg max_gap=" + std::to_string(r.max_gap) + " period=" + std::to_string(r.period);
    emit(report_to_json(r));
  }
  if (violated) {
    err << "contract violated: " << summary << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_bench(const Config& c, std::ostream& out) {
  TableOptions opt;
  opt.trials = c.trials;
  opt.seed0 = c.seed;
  opt.parallel = !c.serial;
  if (opt.trials < 1) throw std::invalid_argument("--trials must be at least 1");
  const auto rows = c.table == "n" ? run_table_n(opt) : run_table_t(opt);
  Emitter(c.output, out)(rows_to_csv(rows));
  return kExitOk;
}

int cmd_render(const Config& c, std::ostream& out) {
  const Instance inst = instance_from_json(read_text_file(c.input));
  std::string svg;
  if (c.plan.empty()) {
    svg = render_svg(inst);
  } else {
    const AnyPlan plan = plan_from_json(read_text_file(c.plan));
    svg = std::visit([&](const auto& p) { return render_svg(inst, p); }, plan);
  }
  Emitter(c.output, out)(svg);
  return kExitOk;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Sweep-coverage planning and verification for mobile sensors", "bsweep"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", c.n, "Number of segments")->capture_default_str();
  gen->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  gen->add_option("--t", c.t, "Sweep period t (s)")->capture_default_str();
  gen->add_option("--v", c.v, "Sensor speed v (m/s)")->capture_default_str();
  gen->add_option("--region", c.region, "Side of the square region (m)")->capture_default_str();
  gen->add_option("--max-len", c.max_len, "Maximum segment length (m)")->capture_default_str();
  gen->add_option("--kind", c.kind, "segments, or energy for one closed curve with a source")
      ->check(CLI::IsMember({"segments", "energy"}))
      ->capture_default_str();
  gen->add_option("-o,--output", c.output, "Instance file (default: stdout)");

  auto* plan = app.add_subcommand("plan", "Compute a deployment plan");
  plan->add_option("--alg", c.alg, "Planner")
      ->required()
      ->check(CLI::IsMember({"single", "energy", "special", "bscmc", "mdmdg"}));
  plan->add_option("-i,--input", c.input, "Instance file")->required();
  plan->add_option("-o,--output", c.output, "Plan file (default: stdout)");

  auto* sim = app.add_subcommand("simulate", "Verify a plan by discrete-time simulation");
  sim->add_option("--check", c.check, "Contract to verify")
      ->required()
      ->check(CLI::IsMember({"sweep", "energy", "mdmdg"}));
  sim->add_option("--strategy", c.strategy, "Sensor motion for --check mdmdg")
      ->check(CLI::IsMember({"stationary", "random-walk", "bounce", "evader"}))
      ->capture_default_str();
  sim->add_option("-i,--input", c.input, "Instance file")->required();
  sim->add_option("-p,--plan", c.plan, "Plan file")->required();
  sim->add_option("--dt", c.dt, "Time step (default t/1000)");
  sim->add_option("--horizon", c.horizon, "Simulated time (default 3t)");
  sim->add_option("--spacing", c.spacing, "Curve sample spacing (default vt/100)");
  sim->add_option("--meet-radius", c.meet_radius, "Mule meeting radius (default v*dt)");
  sim->add_option("--sensor-speed", c.sensor_speed, "Moving sensor speed (default v)");
  sim->add_option("--seed", c.seed, "Seed for random-walk sensors")->capture_default_str();
  sim->add_flag("--single-fleet", c.single_fleet, "Drop the counter-rotating fleet");
  sim->add_option("-o,--output", c.output, "Report file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "Reproduce an experiment table as CSV");
  bench->add_option("--table", c.table, "n: vary segment count, t: vary sweep period")
      ->required()
      ->check(CLI::IsMember({"n", "t"}));
  bench->add_option("--trials", c.trials, "Trials per grid point")->capture_default_str();
  bench->add_option("--seed", c.seed, "Seed of trial 0")->capture_default_str();
  bench->add_flag("--serial", c.serial, "Run trials on one thread");
  bench->add_option("-o,--output", c.output, "CSV file (default: stdout)");

  auto* render = app.add_subcommand("render", "Draw an instance and optional plan as SVG");
  render->add_option("-i,--input", c.input, "Instance file")->required();
  render->add_option("-p,--plan", c.plan, "Plan file");
  render->add_option("-o,--output", c.output, "SVG file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kExitInvalid;
  }

  try {
    if (gen->parsed()) {
      require_positive(c.t, "--t");
      require_positive(c.v, "--v");
      require_positive(c.region, "--region");
      require_positive(c.max_len, "--max-len");
      return cmd_gen(c, out);
    }
    if (plan->parsed()) return cmd_plan(c, out);
    if (sim->parsed()) {
      if (c.dt < 0.0 || c.horizon < 0.0 || c.spacing < 0.0 || c.meet_radius < 0.0) {
        throw std::invalid_argument("--dt, --horizon, --spacing and --meet-radius must be positive");
      }
      return cmd_simulate(c, out, err);
    }
    if (bench->parsed()) return cmd_bench(c, out);
    return cmd_render(c, out);
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kExitInvalid;
  }
}

}  // namespace bsweep::cli
