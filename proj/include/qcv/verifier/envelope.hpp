#pragma once

#include "qcv/numerics/rational.hpp"
#include "qcv/verifier/context.hpp"

namespace qcv::verifier {

enum class Side { plus, minus };
enum class EnvelopeBranch { small_lambda, large_lambda };

// Which minus-side split to use. `stated`: a_- <= 4/λ_n, as in the theorem
// that defines the envelopes. `worked`: a_- <= d/(2λ_k), the condition the
// case analysis of the λ = 1 reduction actually relies on.
enum class BranchRule { stated, worked };

// 𝓐_k^± for a mass a_± = mass:
//   small_lambda:  mass - ((1-b)/d) λ_k mass²
//   large_lambda:  b mass + (1-b) d/(4λ_k) · χ
// χ is 1 except on the minus side when the split λ equals 1.
struct EnvelopeInput {
  EnvelopeBranch branch = EnvelopeBranch::small_lambda;
  Rational mass;
  long lambda_k = 14;
  bool chi = true;
};

// Raw branch value. Rejects mass outside [0, 1], λ_k < λ₂, and a
// small_lambda mass past the parabola's positive root.
Rational envelope_A(const EnvelopeInput& in, const VerificationContext& ctx);

// Branch chosen by the case split at ctx.n: λ_k <= λ_n/4 on the plus side,
// a_- <= 4/λ_n (or d/(2λ_k) under `worked`) on the minus side. Rejects
// inputs outside both cases (λ_k > λ_n, or a_- > 8/λ_n).
EnvelopeBranch select_branch(Side side, const Rational& mass, long k, const VerificationContext& ctx,
                             BranchRule rule = BranchRule::stated);
Rational envelope_A(Side side, const Rational& mass, long k, bool lambda_is_one, const VerificationContext& ctx,
                    BranchRule rule = BranchRule::stated);

}  // namespace qcv::verifier
