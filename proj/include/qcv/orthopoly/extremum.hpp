#pragma once

#include "qcv/numerics/interval.hpp"
#include "qcv/orthopoly/cosine_series.hpp"

namespace qcv::orthopoly {

enum class ExtremumKind { max, min, max_abs };

struct ExtremumOptions {
  double target_width = 1e-5;  // stop once the enclosure is this tight
  double initial_slack = 1e-3;  // sets the first θ-step from the curvature bound
  int max_rounds = 40;
};

struct CertifiedExtremum {
  ExtremumKind kind = ExtremumKind::max;
  Rational domain_lo, domain_hi;  // x-domain
  numerics::Interval value_enclosure;
  double grid_step = 0.0;          // finest θ-cell used
  Rational lipschitz_bound;        // Σ|a_m| m
  Rational curvature_bound;        // Σ|a_m| m²
  double argmax_x = 0.0;           // x of the best sample
  long evaluations = 0;
};

// Encloses max f, min f or max |f| over x ∈ [x_lo, x_hi] ⊆ [-1, 1] for
// f(x) = series(arccos x). Samples on a θ-grid, bounds each cell by the
// endpoint values plus M2 h²/8 (or the first-order L h/2 bound when
// smaller), then bisects only the cells that could still hold the extremum.
CertifiedExtremum certify_extremum(const CosineSeries& series, ExtremumKind kind, const Rational& x_lo,
                                   const Rational& x_hi, const ExtremumOptions& options = {});

// max_{x∈[x_lo,x_hi]} |F_n^{7/2} - F_{n-1}^{7/2}|, i.e. |F̃'_{n+1} - F̃'_n|.
CertifiedExtremum certified_max_abs_difference(int n, const Rational& x_lo = Rational(0),
                                               const Rational& x_hi = Rational(1),
                                               const ExtremumOptions& options = {});

// min_{x∈[x_lo,x_hi]} F̃'_k.
CertifiedExtremum certified_min(int k, const Rational& x_lo, const Rational& x_hi,
                                const ExtremumOptions& options = {});

}  // namespace qcv::orthopoly
