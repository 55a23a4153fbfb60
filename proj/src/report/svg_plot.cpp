#include "qcv/report/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qcv::report {

namespace {

constexpr double kWidth = 960, kHeight = 540;
constexpr double kLeft = 100, kRight = 30, kTop = 50, kBottom = 70;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", std::fabs(v) < 1e-300 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo, hi, step;
};

double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  const double m = f <= 1 ? 1 : f <= 2 ? 2 : f <= 5 ? 5 : 10;
  return m * mag;
}

Axis make_axis(double lo, double hi) {
  if (lo == hi) {
    const double pad = lo == 0 ? 1 : std::fabs(lo) * 0.5;
    lo -= pad;
    hi += pad;
  }
  const double step = nice_step(hi - lo, 6);
  return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end != s.c_str() && *end == '\0' && std::isfinite(out);
}

}  // namespace

std::vector<Point> column_points(const Table& table, const std::string& x, const std::string& y) {
  const int cx = table.column(x), cy = table.column(y);
  if (cx < 0) throw UsageError("no column named '" + x + "'");
  if (cy < 0) throw UsageError("no column named '" + y + "'");
  std::vector<Point> pts;
  for (const auto& row : table.rows) {
    double a, b;
    if (parse_number(row[cx], a) && parse_number(row[cy], b)) pts.emplace_back(a, b);
  }
  return pts;
}

std::string scatter_svg(const std::vector<Point>& points, const PlotOptions& options) {
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  if (!points.empty()) {
    xlo = xhi = points.front().first;
    ylo = yhi = points.front().second;
    for (const auto& [x, y] : points) {
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  }
  const Axis ax = make_axis(xlo, xhi), ay = make_axis(ylo, yhi);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - ax.lo) / (ax.hi - ax.lo) * pw; };
  auto sy = [&](double y) { return kTop + ph - (y - ay.lo) / (ay.hi - ay.lo) * ph; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"540\" viewBox=\"0 0 960 540\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"540\" fill=\"white\"/>\n";
  s += "<text x=\"480\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" +
       escape(options.title) + "</text>\n";

  s += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  const int nx = static_cast<int>(std::lround((ax.hi - ax.lo) / ax.step));
  const int ny = static_cast<int>(std::lround((ay.hi - ay.lo) / ay.step));
  for (int i = 0; i <= nx; ++i) {
    const double x = sx(ax.lo + i * ax.step);
    s += "<line x1=\"" + fixed(x) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" + fixed(x) + "\" y2=\"" +
         fixed(kTop + ph) + "\"/>\n";
  }
  for (int i = 0; i <= ny; ++i) {
    const double y = sy(ay.lo + i * ay.step);
    s += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(y) + "\" x2=\"" + fixed(kLeft + pw) + "\" y2=\"" +
         fixed(y) + "\"/>\n";
  }
  s += "</g>\n";

  s += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(pw) + "\" height=\"" +
       fixed(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  if (ay.lo < 0 && ay.hi > 0) {
    s += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(sy(0)) + "\" x2=\"" + fixed(kLeft + pw) + "\" y2=\"" +
         fixed(sy(0)) + "\" stroke=\"#aa3333\" stroke-dasharray=\"6 4\"/>\n";
  }

  s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= nx; ++i) {
    const double v = ax.lo + i * ax.step;
    s += "<text x=\"" + fixed(sx(v)) + "\" y=\"" + fixed(kTop + ph + 18) + "\" text-anchor=\"middle\">" +
         label(v) + "</text>\n";
  }
  for (int i = 0; i <= ny; ++i) {
    const double v = ay.lo + i * ay.step;
    s += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(sy(v) + 4) + "\" text-anchor=\"end\">" + label(v) +
         "</text>\n";
  }
  s += "</g>\n";
  s += "<text x=\"" + fixed(kLeft + pw / 2) + "\" y=\"" + fixed(kHeight - 20) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + escape(options.x_label) +
       "</text>\n";
  s += "<text x=\"24\" y=\"" + fixed(kTop + ph / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" " +
       "font-size=\"14\" transform=\"rotate(-90 24 " + fixed(kTop + ph / 2) + ")\">" + escape(options.y_label) +
       "</text>\n";

  s += "<g fill=\"#1f4e9a\">\n";
  for (const auto& [x, y] : points)
    s += "<circle cx=\"" + fixed(sx(x)) + "\" cy=\"" + fixed(sy(y)) + "\" r=\"2.5\"/>\n";
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace qcv::report
