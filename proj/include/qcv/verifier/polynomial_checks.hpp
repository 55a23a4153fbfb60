#pragma once

#include "qcv/orthopoly/extremum.hpp"
#include "qcv/verifier/certificate.hpp"

namespace qcv::verifier {

// c_n = max_{[0,1]} |F̃'_{n+1} - F̃'_n|: <= 0.12 for n <= 29, < 0.026 beyond.
Certificate cn_check(long n, const orthopoly::ExtremumOptions& options = {});

// min_{[0,1]} F̃'_k >= -m₀ on the exact coefficients (k <= 200) or through
// the asymptotic expansion (k > 200).
Certificate lemma_min_check(long k, const orthopoly::ExtremumOptions& options = {});

// 3/10 <= F̃'_k(1 - 8/λ_k) <= 33/100. Exact evaluation for k <= 100, the
// alternating hypergeometric sandwich (j₁ = 5, j₂ = 6) beyond.
Certificate pt_check(long k);

// max_{[0, 1-8/λ_k]} F̃'_k <= b, the flat part of the pointwise bound.
Certificate pointwise_upper_check(long k, const orthopoly::ExtremumOptions& options = {});

}  // namespace qcv::verifier
