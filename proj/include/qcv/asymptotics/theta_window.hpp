#pragma once

#include "qcv/numerics/interval.hpp"
#include "qcv/numerics/rational.hpp"
#include "qcv/verifier/certificate.hpp"

namespace qcv::asymptotics {

using numerics::HalfInteger;
using numerics::Interval;

// δ(ν) = (ν - √ν + 1/2)/(ν + 1/2).
Interval delta(HalfInteger nu, mpfr_prec_t prec = numerics::kDefaultPrecision);

// v(θ) = sin²θ F_n^ν(cos θ), so
//   v'(θ) = sin θ (2 cos θ F_n^ν(cos θ) - n(n+2ν)/(2ν+1) sin²θ F_{n-1}^{ν+1}(cos θ)).
Interval v_prime(int n, HalfInteger nu, const Interval& theta);

// Sign samples: v'(θ̄) < 0 and v'(θ̲(1 - 10⁻³)) > 0 with
//   θ̄ = arcsin √((4ν+2)/(n(n+2ν))),  θ̲ = arcsin √(δ (4ν+2)/(n(n+2ν))).
// A sanity check of the analytic lemma, not part of the proof.
verifier::Certificate theta_window_samples(int n, HalfInteger nu);

}  // namespace qcv::asymptotics
