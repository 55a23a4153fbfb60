#pragma once

#include <array>
#include <map>
#include <vector>

#include "qcv/verifier/certificate.hpp"
#include "qcv/verifier/context.hpp"

namespace qcv::verifier {

// Certified upper bounds on c_k = max_{[0,1]} |F̃'_{k+1} - F̃'_k|.
class CkTable {
 public:
  void set(long k, Rational upper) { upper_[k] = std::move(upper); }
  bool has(long k) const { return upper_.count(k) != 0; }
  // Throws std::out_of_range when k was never certified.
  const Rational& upper(long k) const;
  // Runs the certified extremum engine for k_from..k_to.
  static CkTable compute(long k_from, long k_to);

 private:
  std::map<long, Rational> upper_;
};

// Polynomial in a, ascending coefficients, for one fixed α.
using APoly = std::array<Rational, 5>;

Rational eval(const APoly& p, const Rational& a);
// Exact max / min of a polynomial of degree <= 2 over [lo, hi].
Rational max_quadratic(const APoly& p, const Rational& lo, const Rational& hi);
Rational min_quadratic(const APoly& p, const Rational& lo, const Rational& hi);

// g_{n,1}, g_{n,2}, g_{n,3} of the large-n argument at one α. g_{n,2} uses
// the inner factor (1 - ((1-b)/d) λ_k d0/λ_{n+4})².
std::array<APoly, 3> g_component_polys(long n, const Rational& alpha, const VerificationContext& ctx);

// Enclosures over the α-interval (hull at both endpoints) at one a.
std::array<Enclosure, 3> g_components(long n, const Rational& a, const VerificationContext& ctx);

// g̃_n at one α: the inner factor keeps a, so the first sum contributes up to
// a⁴. With chi set, each summand gains (1/2) c_k a² (weight times c_k).
APoly g_tilde_poly(long n, const Rational& alpha, const VerificationContext& ctx, bool chi, const CkTable* ck);

// Enclosure of g̃_n(a) over the α-interval.
Enclosure g_tilde(long n, const Rational& a, const VerificationContext& ctx, bool chi, const CkTable* ck);

// The regime rule: the c_k correction is active for 5 <= n <= 61.
bool chi_active(long n);

// One certificate: both endpoint values negative, a²-coefficient positive,
// and g̃'' positive on the a-range (so the endpoints decide the sign).
Certificate induction_check(long n, const VerificationContext& ctx, bool chi, const CkTable* ck);

// n ≡ 1 (mod 4) in [n_from, n_to]; the default rule per n, plus the other
// χ variant at n = 61 and 65.
std::vector<Certificate> induction_sweep(long n_from, long n_to, const VerificationContext& ctx, const CkTable& ck);

// g_{n,1} <= -853.33, g_{n,2} <= 571.123, g_{n,3} <= 280.95 and the total
// <= -1.257 at n = 10001, each over the whole a-range and α-interval.
std::vector<Certificate> aggregate_certificates(const VerificationContext& ctx, long n = 10001);

}  // namespace qcv::verifier
