#pragma once

#include <functional>

#include "qcv/numerics/interval.hpp"

namespace qcv::numerics {

using IntervalFunction = std::function<Interval(const Interval&)>;

struct BoundSearchOptions {
  int max_depth = 48;
  long max_evaluations = 400000;
  // Initial uniform split of the domain before bisection starts.
  int initial_cells = 1;
  // Keep refining accepted cells until the certified bound is within this
  // distance of the best point value (0 disables).
  Rational refine_gap = Rational(0);
};

enum class BoundOutcome { holds, violated, undecided };

struct BoundSearchResult {
  BoundOutcome outcome = BoundOutcome::undecided;
  // Enclosure of the extremum found: for a lower-bound search, lo is the
  // certified lower bound over the domain (when holds) and hi the smallest
  // point value seen.
  Rational extremum_lo;
  Rational extremum_hi;
  Rational witness;  // argument of the best point value
  long evaluations = 0;
};

// Certify f(x) >= target for all x in [lo, hi] by bisection on interval
// enclosures. A point evaluation that is certainly below target is a
// counterexample and ends the search with `violated`.
BoundSearchResult certify_lower_bound(const IntervalFunction& f, const Rational& lo, const Rational& hi,
                                      const Rational& target, mpfr_prec_t prec,
                                      const BoundSearchOptions& options = {});

// Mirror image: certify f(x) <= target.
BoundSearchResult certify_upper_bound(const IntervalFunction& f, const Rational& lo, const Rational& hi,
                                      const Rational& target, mpfr_prec_t prec,
                                      const BoundSearchOptions& options = {});

}  // namespace qcv::numerics
