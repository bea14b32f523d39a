#include "bsweep/svg.hpp"

#include <cstdio>

namespace bsweep {

namespace {

constexpr double kCanvasPx = 800.0;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

class Canvas {
 public:
  explicit Canvas(double side) : side_(side > 0.0 ? side : 1.0) {}

  // SVG's y axis points down; flip so the plane reads as usual.
  std::string xy(Point2D p) const { return fmt(p.x) + "," + fmt(side_ - p.y); }
  std::string x(Point2D p) const { return fmt(p.x); }
  std::string y(Point2D p) const { return fmt(side_ - p.y); }
  double side() const { return side_; }
  double stroke() const { return side_ / 800.0; }

 private:
  double side_;
};

std::string point_list(const Canvas& c, const std::vector<Point2D>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += c.xy(pts[i]);
  }
  return s;
}

std::string line(const Canvas& c, const char* cls, Point2D a, Point2D b, double width) {
  return "  <line class=\"" + std::string(cls) + "\" x1=\"" + c.x(a) + "\" y1=\"" + c.y(a) +
         "\" x2=\"" + c.x(b) + "\" y2=\"" + c.y(b) + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
}

std::string circle(const Canvas& c, const char* cls, Point2D p, double r) {
  return "  <circle class=\"" + std::string(cls) + "\" cx=\"" + c.x(p) + "\" cy=\"" + c.y(p) +
         "\" r=\"" + fmt(r) + "\"/>\n";
}

RenderTour tour_of(const DeploymentPlan& p) { return {p.tour, p.sensor_offsets, p.connectors}; }

}  // namespace

std::string render_svg(const RenderScene& scene) {
  const Canvas c(scene.region_side);
  const double w = 2.0 * c.stroke();
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(kCanvasPx) +
         "\" height=\"" + fmt(kCanvasPx) + "\" viewBox=\"0 0 " + fmt(c.side()) + " " +
         fmt(c.side()) + "\">\n";
  out += "  <style>.curve{stroke:#1f4e9c;fill:none}.connector{stroke:#c0392b;stroke-dasharray:1,1}"
         ".tour{stroke:#27ae60;fill:none;stroke-opacity:0.6}.sensor{fill:#8e44ad}"
         ".source{fill:#f39c12}</style>\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + fmt(c.side()) + "\" height=\"" + fmt(c.side()) +
         "\" fill=\"white\" stroke=\"#999999\" stroke-width=\"" + fmt(c.stroke()) + "\"/>\n";

  for (const auto& curve : scene.curves) {
    const auto& v = curve.vertices();
    if (v.empty()) continue;
    if (v.size() == 2 && !curve.closed()) {
      out += line(c, "curve", v[0], v[1], w);
    } else if (v.size() == 1) {
      out += circle(c, "curve", v[0], w);
    } else {
      out += "  <" + std::string(curve.closed() ? "polygon" : "polyline") +
             " class=\"curve\" points=\"" + point_list(c, v) + "\" stroke-width=\"" + fmt(w) +
             "\"/>\n";
    }
  }
  for (const auto& t : scene.tours) {
    for (const auto& s : t.connectors) out += line(c, "connector", s.a, s.b, w);
    out += "  <polygon class=\"tour\" points=\"" + point_list(c, t.tour.vertices()) +
           "\" stroke-width=\"" + fmt(c.stroke()) + "\"/>\n";
    for (double o : t.sensor_offsets) {
      if (t.tour.empty()) break;
      out += circle(c, "sensor", arc_point(t.tour, o), 3.0 * c.stroke());
    }
  }
  if (scene.energy_source) out += circle(c, "source", *scene.energy_source, 5.0 * c.stroke());
  out += "</svg>\n";
  return out;
}

std::string render_svg(const Instance& inst) {
  RenderScene s;
  s.region_side = inst.region_side;
  s.curves = inst.curves;
  if (inst.energy) s.energy_source = inst.energy->e;
  return render_svg(s);
}

std::string render_svg(const Instance& inst, const DeploymentPlan& plan) {
  RenderScene s;
  s.region_side = inst.region_side;
  s.curves = inst.curves;
  s.tours.push_back(tour_of(plan));
  if (plan.energy_source) s.energy_source = plan.energy_source;
  else if (inst.energy) s.energy_source = inst.energy->e;
  return render_svg(s);
}

std::string render_svg(const Instance& inst, const MultiDeploymentPlan& plan) {
  RenderScene s;
  s.region_side = inst.region_side;
  s.curves = inst.curves;
  for (const auto& p : plan.components) s.tours.push_back(tour_of(p));
  return render_svg(s);
}

std::string render_svg(const Instance& inst, const DataMulePlan& plan) {
  RenderScene s;
  s.region_side = inst.region_side;
  s.curves = inst.curves;
  s.tours.push_back({plan.tour, plan.offsets, {}});
  return render_svg(s);
}

}  // namespace bsweep
