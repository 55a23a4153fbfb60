#pragma once

#include <vector>

#include "qcv/verifier/certificate.hpp"
#include "qcv/verifier/context.hpp"

namespace qcv::verifier {

// Range of n scanned by the quotient inequalities that quantify over n.
struct LedgerOptions {
  long scan_n_from = 65;
  long scan_n_to = 1001;
  Rational c_small = make_rational(3, 25);   // c_k bound for 6 <= k <= 29
  Rational c_large = make_rational(13, 500);  // c_k bound for k >= 30
};

// Every standalone numeric inequality of the case analysis, the four large-n
// aggregates and the base bounds, one certificate each, numbered in order.
std::vector<Certificate> scalar_ledger(const VerificationContext& ctx, const LedgerOptions& options = {});

}  // namespace qcv::verifier
