#include "qcv/numerics/minimize.hpp"

#include <optional>
#include <vector>

namespace qcv::numerics {

namespace {

struct Cell {
  Rational a, b;
  int depth;
};

std::optional<Interval> try_eval(const IntervalFunction& f, const Interval& x) {
  try {
    return f(x);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

BoundSearchResult certify_lower_bound(const IntervalFunction& f, const Rational& lo, const Rational& hi,
                                      const Rational& target, mpfr_prec_t prec,
                                      const BoundSearchOptions& options) {
  if (lo > hi) throw std::invalid_argument("empty search domain");
  BoundSearchResult result;
  std::optional<Rational> certified_low;
  std::optional<Rational> best_point;

  auto probe = [&](const Rational& x) -> bool {
    auto v = try_eval(f, Interval(x, prec));
    ++result.evaluations;
    if (!v) return false;
    Rational vh = v->hi_rational();
    if (!best_point || vh < *best_point) {
      best_point = vh;
      result.witness = x;
    }
    return v->certainly_less(target);
  };

  std::vector<Cell> stack;
  const int n0 = std::max(1, options.initial_cells);
  for (int i = n0 - 1; i >= 0; --i) {
    Rational a = lo + (hi - lo) * Rational(i, n0);
    Rational b = lo + (hi - lo) * Rational(i + 1, n0);
    a.canonicalize();
    b.canonicalize();
    stack.push_back({a, b, 0});
  }

  if (probe(lo) || probe(hi)) {
    result.outcome = BoundOutcome::violated;
    result.extremum_lo = *best_point;
    result.extremum_hi = *best_point;
    return result;
  }

  bool undecided = false;
  while (!stack.empty()) {
    Cell c = std::move(stack.back());
    stack.pop_back();
    auto v = try_eval(f, Interval(c.a, c.b, prec));
    ++result.evaluations;
    const bool accepted = v && v->certainly_greater_equal(target);
    bool close_enough = true;
    if (accepted && sgn(options.refine_gap) > 0 && best_point) {
      close_enough = (*best_point - v->lo_rational()) <= options.refine_gap;
    }
    if (accepted && (close_enough || c.depth >= options.max_depth)) {
      Rational low = v->lo_rational();
      if (!certified_low || low < *certified_low) certified_low = low;
      continue;
    }
    Rational m = (c.a + c.b) / 2;
    if (!accepted && probe(m)) {
      result.outcome = BoundOutcome::violated;
      result.extremum_lo = *best_point;
      result.extremum_hi = *best_point;
      return result;
    }
    if (c.depth >= options.max_depth || result.evaluations >= options.max_evaluations) {
      undecided = true;
      if (v) {
        Rational low = v->lo_rational();
        if (!certified_low || low < *certified_low) certified_low = low;
      }
      continue;
    }
    if (accepted) probe(m);
    stack.push_back({m, c.b, c.depth + 1});
    stack.push_back({c.a, m, c.depth + 1});
  }

  result.outcome = undecided ? BoundOutcome::undecided : BoundOutcome::holds;
  result.extremum_hi = best_point.value_or(target);
  result.extremum_lo = certified_low.value_or(result.extremum_hi);
  return result;
}

BoundSearchResult certify_upper_bound(const IntervalFunction& f, const Rational& lo, const Rational& hi,
                                      const Rational& target, mpfr_prec_t prec,
                                      const BoundSearchOptions& options) {
  IntervalFunction neg = [&f](const Interval& x) { return -f(x); };
  BoundSearchResult r = certify_lower_bound(neg, lo, hi, -target, prec, options);
  Rational elo = -r.extremum_hi;
  Rational ehi = -r.extremum_lo;
  r.extremum_lo = elo;
  r.extremum_hi = ehi;
  return r;
}

}  // namespace qcv::numerics
