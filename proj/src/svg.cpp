#include "recfac/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace recfac {

namespace {

struct Pt {
  double x;
  double y;
};

using Polyline = std::vector<Pt>;

double to_double(const Int& v) { return v.convert_to<double>(); }

struct Coefficients {
  double a, b, c, n;
};

// Real Y interval where a real X exists; open-ended conics are clipped to [lo, hi].
std::vector<Polyline> sample_curve(const Coefficients& k, double lo, double hi, int steps) {
  auto disc = [&](double y) {
    double lin = k.b * y + 1.0;
    return lin * lin - 4.0 * k.a * (k.c * y * y - k.n * y);
  };
  // Y-endpoints of the real part: roots of D y² + (2b + 4an) y + 1.
  std::vector<double> ys;
  for (int i = 0; i <= steps; ++i) ys.push_back(lo + (hi - lo) * i / steps);
  const double qa = k.b * k.b - 4.0 * k.a * k.c;
  const double qb = 2.0 * k.b + 4.0 * k.a * k.n;
  const double qd = qb * qb - 4.0 * qa;
  if (qa != 0.0 && qd >= 0.0) {
    for (double s : {-1.0, 1.0}) {
      double r = (-qb + s * std::sqrt(qd)) / (2.0 * qa);
      if (r > lo && r < hi) ys.push_back(r);
    }
  }
  std::sort(ys.begin(), ys.end());

  std::vector<Polyline> runs;
  for (double branch : {1.0, -1.0}) {
    Polyline cur;
    for (double y : ys) {
      double d = disc(y);
      if (d < 0.0 && d > -1e-9) d = 0.0;
      if (d < 0.0) {
        if (cur.size() > 1) runs.push_back(cur);
        cur.clear();
        continue;
      }
      cur.push_back({(-(k.b * y + 1.0) + branch * std::sqrt(d)) / (2.0 * k.a), y});
    }
    if (cur.size() > 1) runs.push_back(cur);
  }
  // An ellipse yields one run per branch meeting at both ends; close it.
  if (qa < 0.0 && runs.size() == 2) {
    Polyline loop = runs[0];
    loop.insert(loop.end(), runs[1].rbegin(), runs[1].rend());
    loop.push_back(loop.front());
    return {loop};
  }
  return runs;
}

std::vector<Polyline> curve_for(const ConicInstance& inst, const Int& n, const SvgOptions& options) {
  Coefficients k{to_double(inst.poly.a()), to_double(inst.poly.b()), to_double(inst.poly.c()), to_double(n)};
  ConicInstance member(inst.poly, n);
  double lo;
  double hi;
  if (member.discriminant() < 0) {
    auto [ylo, yhi] = ellipse_y_range(member);
    lo = to_double(ylo);
    hi = to_double(yhi);
  } else {
    double b = options.box ? to_double(*options.box) : 10.0;
    lo = -b;
    hi = b;
  }
  return sample_curve(k, lo, hi, 720);
}

}  // namespace

std::string render_conic_svg(const ConicInstance& inst, const std::vector<LatticePoint>& points,
                             const SvgOptions& options) {
  std::vector<std::pair<std::vector<Polyline>, bool>> curves;
  if (options.overlay) {
    for (Int n = options.overlay->first; n <= options.overlay->second; ++n) {
      if (n != inst.n) curves.emplace_back(curve_for(inst, n, options), false);
    }
  }
  curves.emplace_back(curve_for(inst, inst.n, options), true);

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  auto extend = [&](double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (const auto& [runs, highlighted] : curves) {
    for (const Polyline& run : runs) {
      for (const Pt& p : run) extend(p.x, p.y);
    }
  }
  for (const LatticePoint& p : points) extend(to_double(p.X), to_double(p.Y));
  if (options.box) {
    double b = to_double(*options.box);
    min_x = std::max(min_x, -b);
    max_x = std::min(max_x, b);
    min_y = std::max(min_y, -b);
    max_y = std::min(max_y, b);
  }
  const double pad = 0.08 * std::max({max_x - min_x, max_y - min_y, 1.0});
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;
  const double scale = std::min(options.width / (max_x - min_x), options.height / (max_y - min_y));
  auto sx = [&](double x) { return (x - min_x) * scale; };
  auto sy = [&](double y) { return (max_y - y) * scale; };
  const double w = (max_x - min_x) * scale;
  const double h = (max_y - min_y) * scale;

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << " " << h << "\">\n";
  os << "  <title>" << inst.equation() << "</title>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <g stroke=\"#888\" stroke-width=\"1\">\n";
  os << "    <line x1=\"0\" y1=\"" << sy(0) << "\" x2=\"" << w << "\" y2=\"" << sy(0) << "\"/>\n";
  os << "    <line x1=\"" << sx(0) << "\" y1=\"0\" x2=\"" << sx(0) << "\" y2=\"" << h << "\"/>\n";
  os << "  </g>\n";
  for (const auto& [runs, highlighted] : curves) {
    for (const Polyline& run : runs) {
      os << "  <polyline fill=\"none\" stroke=\"" << (highlighted ? "#1f4fd8" : "#c8c8c8") << "\" stroke-width=\""
         << (highlighted ? 2 : 1) << "\" points=\"";
      for (const Pt& p : run) {
        if (p.x < min_x || p.x > max_x || p.y < min_y || p.y > max_y) continue;
        os << sx(p.x) << "," << sy(p.y) << " ";
      }
      os << "\"/>\n";
    }
  }
  for (const LatticePoint& p : points) {
    const double x = sx(to_double(p.X));
    const double y = sy(to_double(p.Y));
    os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#d62728\"/>\n";
    os << "  <text x=\"" << x + 6 << "\" y=\"" << y - 6 << "\" font-size=\"12\" font-family=\"sans-serif\">(" << p.X
       << "," << p.Y << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace recfac
