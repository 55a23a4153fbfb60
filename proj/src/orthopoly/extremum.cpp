#include "qcv/orthopoly/extremum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qcv/numerics/elementary.hpp"
#include "qcv/orthopoly/gegenbauer.hpp"

namespace qcv::orthopoly {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double up(double v) { return std::nextafter(v, kInf); }
double down(double v) { return std::nextafter(v, -kInf); }

// Everything is phrased as a supremum: min f becomes sup(-f), max |f| stays.
double upper_measure(ExtremumKind kind, const CosineSeries::Enclosure& e) {
  switch (kind) {
    case ExtremumKind::max: return e.hi;
    case ExtremumKind::min: return -e.lo;
    case ExtremumKind::max_abs: return std::max(std::fabs(e.lo), std::fabs(e.hi));
  }
  return kInf;
}

double lower_measure(ExtremumKind kind, const CosineSeries::Enclosure& e) {
  switch (kind) {
    case ExtremumKind::max: return e.lo;
    case ExtremumKind::min: return -e.hi;
    case ExtremumKind::max_abs: return std::max({0.0, e.lo, -e.hi});
  }
  return -kInf;
}

struct Cell {
  double a, b;
  double ua, ub;  // upper measures at the endpoints
};

}  // namespace

CertifiedExtremum certify_extremum(const CosineSeries& series, ExtremumKind kind, const Rational& x_lo,
                                   const Rational& x_hi, const ExtremumOptions& options) {
  if (!(x_lo < x_hi) || x_lo < -1 || x_hi > 1) throw std::invalid_argument("bad extremum domain");

  CertifiedExtremum out;
  out.kind = kind;
  out.domain_lo = x_lo;
  out.domain_hi = x_hi;
  out.lipschitz_bound = series.first_moment();
  out.curvature_bound = series.second_moment();
  const double lip = up(out.lipschitz_bound.get_d());
  const double curv = up(out.curvature_bound.get_d());

  const auto theta_a = numerics::acos(numerics::Interval(x_hi, numerics::kDefaultPrecision));
  const auto theta_b = numerics::acos(numerics::Interval(x_lo, numerics::kDefaultPrecision));
  // Cover the superset for the upper bound; only sample points certainly in
  // the domain count toward the lower bound.
  const double outer_lo = theta_a.lo_double(), outer_hi = theta_b.hi_double();
  const double inner_lo = theta_a.hi_double(), inner_hi = theta_b.lo_double();

  double best_lower = -kInf, best_theta = inner_lo;
  auto sample = [&](double theta) {
    const auto e = series.evaluate(theta);
    ++out.evaluations;
    if (theta >= inner_lo && theta <= inner_hi) {
      const double l = lower_measure(kind, e);
      if (l > best_lower) {
        best_lower = l;
        best_theta = theta;
      }
    }
    return upper_measure(kind, e);
  };

  auto cell_bound = [&](const Cell& c) {
    const double h = up(c.b - c.a);
    const double slack2 = up(up(up(curv * h) * h) / 8);
    const double slack1 = up(up(lip * h) / 2);
    const double second = up(std::max(c.ua, c.ub) + slack2);
    const double first = up(up(up(c.ua + c.ub) / 2) + slack1);
    return std::min(first, second);
  };

  const double span = outer_hi - outer_lo;
  double h0 = 0.05;
  if (curv > 0) h0 = std::min(h0, std::sqrt(8 * options.initial_slack / curv));
  const long cells0 = std::max(2L, static_cast<long>(std::ceil(span / h0)));

  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(cells0));
  double prev_t = outer_lo, prev_u = sample(outer_lo);
  for (long i = 1; i <= cells0; ++i) {
    const double t = i == cells0 ? outer_hi : outer_lo + span * static_cast<double>(i) / static_cast<double>(cells0);
    const double u = sample(t);
    cells.push_back({prev_t, t, prev_u, u});
    prev_t = t;
    prev_u = u;
  }
  // A single sample inside the domain is enough to anchor the lower bound;
  // force one at the inner midpoint in case the grid skipped the inner range.
  if (best_lower == -kInf && inner_lo <= inner_hi) sample(0.5 * (inner_lo + inner_hi));

  double step = h0;
  double upper = kInf;
  for (int round = 0;; ++round) {
    upper = -kInf;
    for (const auto& c : cells) upper = std::max(upper, cell_bound(c));
    if (upper - best_lower <= options.target_width || round >= options.max_rounds) break;
    const double threshold = best_lower + options.target_width / 2;
    std::vector<Cell> next;
    next.reserve(cells.size());
    bool refined = false;
    for (const auto& c : cells) {
      if (cell_bound(c) <= threshold || c.b - c.a < 1e-13) {
        next.push_back(c);
        continue;
      }
      const double m = 0.5 * (c.a + c.b);
      const double um = sample(m);
      next.push_back({c.a, m, c.ua, um});
      next.push_back({m, c.b, um, c.ub});
      step = std::min(step, m - c.a);
      refined = true;
    }
    cells.swap(next);
    if (!refined) break;
  }

  double lo = best_lower, hi = upper;
  if (kind == ExtremumKind::min) {
    lo = -upper;
    hi = -best_lower;
  }
  out.value_enclosure = numerics::Interval::from_doubles(down(lo), up(hi), numerics::kDefaultPrecision);
  out.grid_step = step;
  out.argmax_x = std::cos(best_theta);
  return out;
}

CertifiedExtremum certified_max_abs_difference(int n, const Rational& x_lo, const Rational& x_hi,
                                               const ExtremumOptions& options) {
  if (n < 1) throw std::invalid_argument("certified_max_abs_difference needs n >= 1");
  const CosineSeries diff = CosineSeries::gegenbauer(n, kNu72) - CosineSeries::gegenbauer(n - 1, kNu72);
  return certify_extremum(diff, ExtremumKind::max_abs, x_lo, x_hi, options);
}

CertifiedExtremum certified_min(int k, const Rational& x_lo, const Rational& x_hi, const ExtremumOptions& options) {
  if (k < 1) throw std::invalid_argument("certified_min needs k >= 1");
  return certify_extremum(CosineSeries::gegenbauer(k - 1, kNu72), ExtremumKind::min, x_lo, x_hi, options);
}

}  // namespace qcv::orthopoly
