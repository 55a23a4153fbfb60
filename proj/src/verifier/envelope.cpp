#include "qcv/verifier/envelope.hpp"

#include <stdexcept>

namespace qcv::verifier {

using orthopoly::lambda;

Rational envelope_A(const EnvelopeInput& in, const VerificationContext& ctx) {
  if (in.mass < 0 || in.mass > 1) throw std::invalid_argument("envelope mass outside [0, 1]");
  if (in.lambda_k < lambda(2)) throw std::invalid_argument("envelope needs lambda_k >= 14");
  const Rational lk(in.lambda_k);
  if (in.branch == EnvelopeBranch::small_lambda) {
    const Rational v = in.mass - (1 - ctx.b) / ctx.d * lk * in.mass * in.mass;
    if (v < 0) throw std::invalid_argument("small_lambda envelope past its positive root");
    return v;
  }
  Rational v = ctx.b * in.mass;
  if (in.chi) v += (1 - ctx.b) * ctx.d / (4 * lk);
  return v;
}

EnvelopeBranch select_branch(Side side, const Rational& mass, long k, const VerificationContext& ctx,
                             BranchRule rule) {
  const long ln = lambda(ctx.n), lk = lambda(k);
  if (side == Side::plus) {
    if (4 * lk <= ln) return EnvelopeBranch::small_lambda;
    if (lk <= ln) return EnvelopeBranch::large_lambda;
    throw std::invalid_argument("plus envelope needs lambda_k <= lambda_n");
  }
  if (mass * ln > 8) throw std::invalid_argument("minus envelope needs a_- <= 8/lambda_n");
  if (rule == BranchRule::worked) {
    return 2 * mass * lk <= ctx.d ? EnvelopeBranch::small_lambda : EnvelopeBranch::large_lambda;
  }
  return mass * ln <= 4 ? EnvelopeBranch::small_lambda : EnvelopeBranch::large_lambda;
}

Rational envelope_A(Side side, const Rational& mass, long k, bool lambda_is_one, const VerificationContext& ctx,
                    BranchRule rule) {
  EnvelopeInput in;
  in.branch = select_branch(side, mass, k, ctx, rule);
  in.mass = mass;
  in.lambda_k = lambda(k);
  in.chi = !(side == Side::minus && lambda_is_one);
  return envelope_A(in, ctx);
}

}  // namespace qcv::verifier
