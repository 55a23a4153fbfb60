#pragma once

#include <optional>
#include <vector>

#include "qcv/numerics/rational.hpp"

namespace qcv::orthopoly {

using numerics::HalfInteger;
using numerics::Rational;

// In t = sin²θ the normalized Gegenbauer polynomial is a terminating ₂F₁:
//   n = 2m:    F_n^ν(cos θ) = ₂F₁(-m, m+ν; ν+½; t)
//   n = 2m+1:  F_n^ν(cos θ) = cos θ · ₂F₁(-m, m+ν+1; ν+½; t)
// The series alternates; γ_i are the term magnitudes without t^i.
std::vector<Rational> hypergeometric_gammas(int n, HalfInteger nu);

// Full terminating sum Σ (-1)^i γ_i t^i.
Rational hypergeometric_full(int n, HalfInteger nu, const Rational& t);

struct PartialSums {
  Rational lower;  // S_{j1}, j1 odd
  Rational upper;  // S_{j2}, j2 even
  Rational min_ratio;  // min γ_i/γ_{i+1} over the indices the sandwich needs
};

// lower <= ₂F₁ <= upper, valid once the terms γ_i t^i decrease beyond
// min(j1, j2); that is checked exactly and nullopt returned otherwise.
std::optional<PartialSums> hypergeometric_partial_sums(int n, HalfInteger nu, const Rational& t, int j1, int j2);

}  // namespace qcv::orthopoly
