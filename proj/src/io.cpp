#include "bsweep/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bsweep {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

Json point_json(Point2D p) { return Json::array({p.x, p.y}); }

Point2D point_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(std::string(what) + ": expected [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) fail(std::string("field '") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(std::string("field '") + key + "' must be finite");
  return x;
}

std::vector<double> numbers(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) fail(std::string("field '") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Json points_json(const std::vector<Point2D>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

std::vector<Point2D> points_from(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected an array of points");
  std::vector<Point2D> out;
  for (const auto& p : j) out.push_back(point_from(p, what));
  return out;
}

Polyline tour_from(const Json& j) {
  auto pts = points_from(field(j, "tour"), "tour");
  if (pts.empty()) fail("tour: needs at least one point");
  Polyline tour(std::move(pts), true);
  const double stored = number(j, "tour_length");
  if (std::abs(stored - tour.length()) > 1e-6 * std::max(1.0, tour.length())) {
    fail("tour_length does not match the tour");
  }
  return tour;
}

Json connectors_json(const std::vector<Segment>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(Json::array({point_json(c.a), point_json(c.b)}));
  return a;
}

std::vector<Segment> connectors_from(const Json& j) {
  if (!j.is_array()) fail("connectors: expected an array");
  std::vector<Segment> out;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) fail("connectors: expected [[x,y],[x,y]]");
    out.push_back({point_from(c[0], "connector"), point_from(c[1], "connector")});
  }
  return out;
}

// Shared tour body of a DeploymentPlan (also each bscmc component).
Json tour_body(const DeploymentPlan& p) {
  Json j;
  j["algorithm"] = p.algorithm;
  j["tour"] = points_json(p.tour.vertices());
  j["tour_length"] = p.tour_length;
  j["sensor_offsets"] = p.sensor_offsets;
  j["curves"] = p.curves;
  j["connectors"] = connectors_json(p.connectors);
  return j;
}

void read_tour_body(const Json& j, DeploymentPlan& p) {
  p.tour = tour_from(j);
  p.tour_length = p.tour.length();
  p.sensor_offsets = numbers(j, "sensor_offsets");
  if (p.sensor_offsets.empty()) fail("sensor_offsets: at least one sensor required");
  for (double o : p.sensor_offsets) {
    if (!std::isfinite(o) || o < 0.0) fail("sensor_offsets: must be finite and non-negative");
  }
}

void read_components_info(const Json& j, DeploymentPlan& p) {
  if (j.contains("curves")) {
    for (double c : numbers(j, "curves")) p.curves.push_back(static_cast<int>(c));
  }
  if (j.contains("connectors")) p.connectors = connectors_from(j["connectors"]);
}

void read_speed_period(const Json& meta, double& speed, double& period) {
  speed = number(meta, "speed");
  period = number(meta, "period");
  if (!(speed > 0.0) || !(period > 0.0)) fail("metadata: speed and period must be positive");
}

Json single_plan_json(const DeploymentPlan& p) {
  Json j;
  j["algorithm"] = p.algorithm;
  j["tour"] = points_json(p.tour.vertices());
  j["tour_length"] = p.tour_length;
  j["sensor_offsets"] = p.sensor_offsets;
  Json meta;
  meta["speed"] = p.speed;
  meta["period"] = p.period;
  meta["curves"] = p.curves;
  meta["connectors"] = connectors_json(p.connectors);
  if (p.energy_source) {
    Json e;
    e["e"] = point_json(*p.energy_source);
    e["T"] = p.battery_period;
    Json tours = Json::array();
    for (const auto& t : p.etours) {
      tours.push_back({{"start_arc", t.start_arc}, {"end_arc", t.end_arc}, {"length", t.length}});
    }
    e["etours"] = tours;
    e["source_visits"] = p.source_visits;
    meta["energy"] = e;
  }
  for (const auto& [k, v] : p.metadata) meta[k] = v;
  j["metadata"] = meta;
  return j;
}

DeploymentPlan single_plan_from(const Json& j) {
  DeploymentPlan p;
  const Json& alg = field(j, "algorithm");
  if (!alg.is_string()) fail("algorithm must be a string");
  p.algorithm = alg.get<std::string>();
  read_tour_body(j, p);
  const Json& meta = field(j, "metadata");
  read_speed_period(meta, p.speed, p.period);
  read_components_info(meta, p);
  if (meta.contains("energy")) {
    const Json& e = meta["energy"];
    p.energy_source = point_from(field(e, "e"), "energy.e");
    p.battery_period = number(e, "T");
    for (const auto& t : field(e, "etours")) {
      p.etours.push_back({number(t, "start_arc"), number(t, "end_arc"), number(t, "length")});
    }
    p.source_visits = numbers(e, "source_visits");
  }
  for (auto it = meta.begin(); it != meta.end(); ++it) {
    if (it.value().is_string()) p.metadata[it.key()] = it.value().get<std::string>();
  }
  return p;
}

Json multi_plan_json(const MultiDeploymentPlan& m) {
  if (m.components.empty()) throw std::invalid_argument("plan_to_json: plan without components");
  Json j;
  const DeploymentPlan& first = m.components.front();
  j["algorithm"] = "bscmc";
  j["tour"] = points_json(first.tour.vertices());
  j["tour_length"] = first.tour_length;
  j["sensor_offsets"] = first.sensor_offsets;
  Json meta;
  meta["speed"] = first.speed;
  meta["period"] = first.period;
  meta["chosen_k"] = m.chosen_k;
  meta["total_sensors"] = m.total_sensors;
  meta["per_k_counts"] = m.per_k_counts;
  Json comps = Json::array();
  for (const auto& c : m.components) comps.push_back(tour_body(c));
  meta["components"] = comps;
  j["metadata"] = meta;
  return j;
}

MultiDeploymentPlan multi_plan_from(const Json& j) {
  MultiDeploymentPlan m;
  const Json& meta = field(j, "metadata");
  double speed = 0.0;
  double period = 0.0;
  read_speed_period(meta, speed, period);
  m.chosen_k = static_cast<int>(number(meta, "chosen_k"));
  for (double c : numbers(meta, "per_k_counts")) m.per_k_counts.push_back(static_cast<std::size_t>(c));
  const Json& comps = field(meta, "components");
  if (!comps.is_array() || comps.empty()) fail("metadata.components: expected a non-empty array");
  for (const auto& c : comps) {
    DeploymentPlan p;
    p.algorithm = "bscmc";
    p.speed = speed;
    p.period = period;
    read_tour_body(c, p);
    read_components_info(c, p);
    p.metadata["chosen_k"] = std::to_string(m.chosen_k);
    m.total_sensors += p.sensor_count();
    m.components.push_back(std::move(p));
  }
  if (static_cast<double>(m.total_sensors) != number(meta, "total_sensors")) {
    fail("metadata.total_sensors does not match the components");
  }
  return m;
}

Json mule_plan_json(const DataMulePlan& d) {
  Json j;
  j["algorithm"] = "mdmdg";
  j["tour"] = points_json(d.tour.vertices());
  j["tour_length"] = d.tour_length;
  j["sensor_offsets"] = d.offsets;
  j["fleets"] = {{"cw", d.fleet_cw}, {"ccw", d.fleet_ccw}};
  Json meta;
  meta["speed"] = d.speed;
  meta["period"] = d.period;
  meta["mule_count"] = d.mule_count();
  meta["exact_matching"] = d.exact_matching;
  meta["tree_weight"] = d.tree_weight;
  meta["matching_weight"] = d.matching_weight;
  j["metadata"] = meta;
  return j;
}

DataMulePlan mule_plan_from(const Json& j) {
  DataMulePlan d;
  d.tour = tour_from(j);
  d.tour_length = d.tour.length();
  d.offsets = numbers(j, "sensor_offsets");
  if (d.offsets.empty()) fail("sensor_offsets: at least one mule required");
  const Json& fleets = field(j, "fleets");
  for (double x : numbers(fleets, "cw")) d.fleet_cw.push_back(static_cast<int>(x));
  for (double x : numbers(fleets, "ccw")) d.fleet_ccw.push_back(static_cast<int>(x));
  if (d.fleet_cw.size() != d.offsets.size() || d.fleet_ccw.size() != d.offsets.size()) {
    fail("fleets: each fleet needs one mule per offset");
  }
  const Json& meta = field(j, "metadata");
  read_speed_period(meta, d.speed, d.period);
  if (meta.contains("exact_matching")) d.exact_matching = meta["exact_matching"].get<bool>();
  if (meta.contains("tree_weight")) d.tree_weight = number(meta, "tree_weight");
  if (meta.contains("matching_weight")) d.matching_weight = number(meta, "matching_weight");
  return d;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(std::string("malformed file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(std::string("malformed file: ") + e.what());
  }
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  Json j;
  j["version"] = inst.version;
  j["region_side"] = inst.region_side;
  j["v"] = inst.v;
  j["t"] = inst.t;
  if (inst.energy) j["energy"] = {{"e", point_json(inst.energy->e)}, {"T", inst.energy->battery_period}};
  Json curves = Json::array();
  for (const auto& c : inst.curves) {
    curves.push_back({{"closed", c.closed()}, {"vertices", points_json(c.vertices())}});
  }
  j["curves"] = curves;
  j["seed"] = inst.seed;
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  const Json j = parse(text);
  return guarded([&] {
    Instance inst;
    inst.version = static_cast<int>(number(j, "version"));
    if (inst.version != 1) fail("unsupported instance version " + std::to_string(inst.version));
    inst.region_side = number(j, "region_side");
    inst.v = number(j, "v");
    inst.t = number(j, "t");
    if (!(inst.v > 0.0) || !(inst.t > 0.0)) fail("v and t must be positive");
    if (j.contains("energy")) {
      const Json& e = j["energy"];
      inst.energy = EnergySpec{point_from(field(e, "e"), "energy.e"), number(e, "T")};
      if (!(inst.energy->battery_period > 0.0)) fail("energy.T must be positive");
    }
    const Json& curves = field(j, "curves");
    if (!curves.is_array()) fail("curves: expected an array");
    for (const auto& c : curves) {
      const Json& closed = field(c, "closed");
      if (!closed.is_boolean()) fail("curves: 'closed' must be a boolean");
      auto pts = points_from(field(c, "vertices"), "curve vertices");
      if (pts.empty()) fail("curves: a curve needs at least one vertex");
      inst.curves.emplace_back(std::move(pts), closed.get<bool>());
    }
    if (j.contains("seed")) inst.seed = field(j, "seed").get<std::uint64_t>();
    return inst;
  });
}

std::string plan_to_json(const AnyPlan& plan) {
  const Json j = std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, DeploymentPlan>) return single_plan_json(p);
        else if constexpr (std::is_same_v<T, MultiDeploymentPlan>) return multi_plan_json(p);
        else return mule_plan_json(p);
      },
      plan);
  return j.dump(2) + "\n";
}

AnyPlan plan_from_json(const std::string& text) {
  const Json j = parse(text);
  return guarded([&]() -> AnyPlan {
    const Json& alg = field(j, "algorithm");
    if (!alg.is_string()) fail("algorithm must be a string");
    const std::string name = alg.get<std::string>();
    if (name == "bscmc") return multi_plan_from(j);
    if (name == "mdmdg") return mule_plan_from(j);
    if (name == "single" || name == "energy" || name == "special") return single_plan_from(j);
    fail("unknown algorithm '" + name + "'");
  });
}

std::string report_to_json(const CoverageReport& r) {
  Json j;
  j["check"] = "sweep";
  j["max_gap"] = r.max_gap;
  j["worst_point"] = {{"curve", r.worst_point.curve}, {"arc", r.worst_point.arc}};
  j["violated"] = r.violated;
  j["period"] = r.period;
  j["dt"] = r.dt;
  j["slack"] = r.slack;
  Json gaps = Json::array();
  for (const auto& g : r.per_point_gaps) {
    gaps.push_back({{"curve", g.where.curve}, {"arc", g.where.arc}, {"gap", g.gap}});
  }
  j["per_point_gaps"] = gaps;
  return j.dump(2) + "\n";
}

std::string report_to_json(const RechargeReport& r) {
  Json j;
  j["check"] = "energy";
  j["max_gap"] = r.max_gap;
  j["violated"] = r.violated;
  j["battery_period"] = r.battery_period;
  j["dt"] = r.dt;
  j["slack"] = r.slack;
  j["per_sensor_max_gap"] = r.per_sensor_max_gap;
  return j.dump(2) + "\n";
}

std::string report_to_json(const MeetingReport& r) {
  Json j;
  j["check"] = "mdmdg";
  j["max_gap"] = r.max_gap;
  j["violated"] = r.violated;
  j["period"] = r.period;
  j["dt"] = r.dt;
  j["slack"] = r.slack;
  j["per_sensor_max_gap"] = r.per_sensor_max_gap;
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FormatError("write to '" + path + "' failed");
}

}  // namespace bsweep
