#include "dellac/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dellac/stats.hpp"

namespace dellac {

Overlay parse_overlay(const std::string& s) {
  if (s == "none") return Overlay::none;
  if (s == "paths") return Overlay::paths;
  if (s == "labels") return Overlay::labels;
  throw std::invalid_argument("unknown overlay: " + s);
}

namespace {

struct Canvas {
  int width, height, cell, margin;
  double x(double col) const { return margin + (col - 0.5) * cell; }   // box centre
  double y(double row) const { return margin + (height - row + 0.5) * cell; }
  double gx(double col) const { return margin + col * cell; }  // grid line
  double gy(double row) const { return margin + (height - row) * cell; }
};

std::string num(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << v;
  return os.str();
}

std::string star(double cx, double cy, double r, const std::string& fill) {
  std::ostringstream os;
  os << "<polygon fill=\"" << fill << "\" points=\"";
  for (int k = 0; k < 10; ++k) {
    const double a = -M_PI / 2 + k * M_PI / 5;
    const double rr = k % 2 == 0 ? r : r * 0.45;
    if (k) os << ' ';
    os << num(cx + rr * std::cos(a)) << ',' << num(cy + rr * std::sin(a));
  }
  os << "\"/>\n";
  return os.str();
}

void polyline(std::ostringstream& os, const Canvas& c, const std::vector<Box>& pts,
              const std::string& colour) {
  if (pts.empty()) return;
  os << "<polyline fill=\"none\" stroke=\"" << colour
     << "\" stroke-width=\"3\" stroke-dasharray=\"6,3\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) os << ' ';
    os << num(c.x(pts[k].col)) << ',' << num(c.y(pts[k].row));
  }
  os << "\"/>\n";
  for (const Box& p : pts)
    os << "<circle cx=\"" << num(c.x(p.col)) << "\" cy=\"" << num(c.y(p.row)) << "\" r=\""
       << num(c.cell * 0.38) << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  const Tableau& t = spec.tableau;
  if (!validate(t, spec.kind)) throw std::invalid_argument("render needs a valid tableau");
  const int w = t.width(), h = t.height();
  const Canvas c{w, h, spec.cell, spec.cell};
  const int pw = w * spec.cell + 2 * c.margin, ph = h * spec.cell + 2 * c.margin;
  const bool extended = spec.kind == Kind::even_extended || spec.kind == Kind::odd_extended;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pw << "\" height=\"" << ph
     << "\" viewBox=\"0 0 " << pw << ' ' << ph << "\">\n";
  os << "<rect width=\"" << pw << "\" height=\"" << ph << "\" fill=\"white\"/>\n";

  os << "<g stroke=\"#999\" stroke-width=\"1\">\n";
  for (int j = 0; j <= w; ++j)
    os << "<line x1=\"" << num(c.gx(j)) << "\" y1=\"" << num(c.gy(0)) << "\" x2=\"" << num(c.gx(j))
       << "\" y2=\"" << num(c.gy(h)) << "\"/>\n";
  for (int i = 0; i <= h; ++i)
    os << "<line x1=\"" << num(c.gx(0)) << "\" y1=\"" << num(c.gy(i)) << "\" x2=\"" << num(c.gx(w))
       << "\" y2=\"" << num(c.gy(i)) << "\"/>\n";
  os << "</g>\n";

  // y = x, and y = x + N for Dellac configurations.
  os << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  os << "<line x1=\"" << num(c.gx(0)) << "\" y1=\"" << num(c.gy(0)) << "\" x2=\"" << num(c.gx(w))
     << "\" y2=\"" << num(c.gy(w)) << "\"/>\n";
  if (!extended)
    os << "<line x1=\"" << num(c.gx(0)) << "\" y1=\"" << num(c.gy(w)) << "\" x2=\"" << num(c.gx(w))
       << "\" y2=\"" << num(c.gy(h)) << "\"/>\n";
  os << "</g>\n";

  if (extended) {
    // Free points sit on or beyond x + y = H (box corners).
    const double s = h;
    const double x0 = std::max(0.0, s - h), x1 = std::min<double>(w, s);
    os << "<line stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"5,4\" x1=\"" << num(c.gx(x0))
       << "\" y1=\"" << num(c.gy(s - x0)) << "\" x2=\"" << num(c.gx(x1)) << "\" y2=\"" << num(c.gy(s - x1))
       << "\"/>\n";
  }

  if (extended && spec.overlay == Overlay::paths) {
    if (spec.kind == Kind::even_extended) {
      const PathReport rep = path_report(t);
      polyline(os, c, rep.Bprime, "#40e0d0");
      polyline(os, c, rep.Rprime, "#ffcba4");
      polyline(os, c, rep.B, "blue");
      polyline(os, c, rep.R, "red");
      polyline(os, c, rep.G, "green");
    } else {
      const PathReport rep = path_report_odd(t);
      polyline(os, c, rep.V, "purple");
      polyline(os, c, rep.G, "green");
    }
  }

  const auto free = extended ? free_points(t) : std::vector<Box>{};
  for (const Box& p : t.points()) {
    if (std::find(free.begin(), free.end(), p) != free.end()) {
      os << star(c.x(p.col), c.y(p.row), spec.cell * 0.35, "black");
    } else {
      os << "<circle cx=\"" << num(c.x(p.col)) << "\" cy=\"" << num(c.y(p.row)) << "\" r=\""
         << num(spec.cell * 0.2) << "\" fill=\"black\"/>\n";
    }
  }

  if (extended && spec.overlay == Overlay::labels) {
    std::vector<std::pair<Box, std::string>> text;
    if (spec.kind == Kind::even_extended && w >= 2) {
      for (const auto& [p, l] : assign_forward_labels(t)) text.emplace_back(p, label_name(l));
    } else if (spec.kind == Kind::odd_extended) {
      for (const Box& p : path_report_odd(t).V) text.emplace_back(p, "V");
      for (const Box& p : path_report_odd(t).G) text.emplace_back(p, "G");
    }
    for (const auto& [p, s] : text)
      os << "<text x=\"" << num(c.x(p.col) + spec.cell * 0.3) << "\" y=\"" << num(c.y(p.row) - spec.cell * 0.25)
         << "\" font-family=\"sans-serif\" font-size=\"" << spec.cell / 2 << "\" fill=\"#b03060\">" << s
         << "</text>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace dellac
