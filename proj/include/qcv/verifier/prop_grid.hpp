#pragma once

#include <vector>

#include "qcv/verifier/certificate.hpp"
#include "qcv/verifier/context.hpp"
#include "qcv/verifier/envelope.hpp"
#include "qcv/verifier/induction.hpp"

namespace qcv::verifier {

// Right-hand side of the per-pair estimate as a function of the split
// λ = a_+/a, at one α:
//   B_k(𝓐_k⁺² + 𝓐_k⁻²) + B_{k+1}(𝓐_{k+1}⁺² + 𝓐_{k+1}⁻²) + 2(B_k+B_{k+1}) c_k λ(1-λ) a²
//   + 2(B_{k+1}-B_k) λ(1-λ) a²   if B_k <= B_{k+1}
//   + 2(B_k-B_{k+1}) m₀ (1-λ) a²  otherwise.
Rational f_k_a(long n, long k, const Rational& a, const Rational& split, const Rational& alpha,
               const VerificationContext& ctx, const CkTable& ck, BranchRule rule = BranchRule::stated);

// Hull over both ends of the α-interval.
Enclosure f_k_a(long n, long k, const Rational& a, const Rational& split, const VerificationContext& ctx,
                const CkTable& ck, BranchRule rule = BranchRule::stated);

// max over even k in [2, n-1], a ∈ {d0/λ_{n+4}, d0/λ_n}, λ ∈ {0.50, 0.51, …, 1}
// and both α endpoints of f(λ) - f(1) - corr, with corr = (1/2)(B_k+B_{k+1}) c_k a²
// when `corrected`, else 0. Claim: <= 0.
Certificate prop_grid_check(long n, const VerificationContext& ctx, const CkTable& ck, bool corrected,
                            BranchRule rule = BranchRule::stated);

// The plain form for n >= 41, the corrected one for n <= 65, each under
// both minus-side branch rules.
std::vector<Certificate> prop_grid_sweep(long n_from, long n_to, const VerificationContext& ctx, const CkTable& ck);

}  // namespace qcv::verifier
