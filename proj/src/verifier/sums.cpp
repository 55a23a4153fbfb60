#include "qcv/verifier/sums.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "qcv/orthopoly/gegenbauer.hpp"

namespace qcv::verifier {

using numerics::make_rational;
using orthopoly::lambda;

namespace {

// Horner with coefficients from the highest degree down.
Rational horner(long n, std::initializer_list<Rational> coeffs) {
  Rational acc(0);
  for (const Rational& c : coeffs) acc = acc * n + c;
  return acc;
}

Rational q(long p, long r) { return make_rational(p, r); }

void require_odd(long n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("sums need odd n >= 5, got " + std::to_string(n));
}

Rational weight(long n, long k) {
  return (Rational(lambda(n + 1) - lambda(k)) + q(22, 7)) * (2 * k + 5);
}

Rational s1(long n) { return horner(n, {q(7, 32), q(23, 8), q(-115, 112), q(-4265, 56), q(-20075, 224)}); }

Rational s2(long n) {
  return horner(n, {q(5, 192), q(1, 2), q(3611, 1344), q(-9, 28), q(-100207, 1344), q(-9437, 28), q(-3795, 64)});
}

Rational s3(long n) {
  return horner(n, {q(13, 3072), q(41, 384), q(1525, 1792), q(3011, 2688), q(-48697, 3584), q(-14917, 384),
                    q(-1000525, 5376), q(-1393237, 896), q(-1040985, 1024)});
}

Rational s4(long n) { return horner(n, {q(9, 32), q(33, 8), q(2763, 112), q(3753, 56), q(15147, 224)}); }

Rational s6(long n) { return horner(n, {q(3, 4), q(9, 2), q(27, 4)}); }

Rational s7(long n) {
  auto inv2 = [](long m) -> Rational { return Rational(1) / (Rational(m) * m); };
  return (3 * inv2(n + 1) - inv2(n + 2) + 3 * inv2(n + 3) - inv2(n + 4) + 3 * inv2(n + 5) + 4 * inv2(n + 7) +
          4 * inv2(n - 1)) /
         5;
}

Rational s5_telescoped(long n) {
  Rational s(0);
  for (long k = (n - 1) / 2; k <= n; ++k) s += make_rational(1, k) + make_rational(1, k + 5);
  return s;
}

}  // namespace

Rational printed_s2(long n) {
  return horner(n, {q(5, 192), q(1, 2), q(3611, 1344), q(-9, 28), q(-100207, 5376), q(-1393237, 896),
                    q(-1040985, 1024)});
}

Rational printed_s3(long n) {
  return horner(n, {q(13, 3072), q(41, 384), q(1525, 1792), q(3011, 2688), q(-48697, 3584), q(-14917, 384),
                    q(1000525, 5376), q(-1393237, 896), q(-1040985, 1024)});
}

SumSet closed_form_sums(long n) {
  require_odd(n);
  return {s1(n), s2(n), s3(n), s4(n), s5_telescoped(n), s6(n), s7(n)};
}

SumSet direct_sums(long n) {
  require_odd(n);
  SumSet s;
  for (auto& v : s) v = 0;
  for (long k = 2; k <= (n - 3) / 2; ++k) {
    const Rational w = weight(n, k);
    const Rational l(lambda(k));
    s[0] += w;
    s[1] += w * l;
    s[2] += w * l * l;
  }
  for (long k = (n - 1) / 2; k <= n; ++k) {
    const Rational l(lambda(k));
    s[3] += weight(n, k);
    s[4] += Rational(2 * k + 5) / l;
    s[5] += 2 * k + 5;
    s[6] += Rational(2 * k + 5) / (l * l);
  }
  return s;
}

Certificate check_sum_identity(long n) {
  Certificate cert;
  cert.suite = "sums";
  cert.check_id = "sums/identity/n=" + std::to_string(n);
  cert.index = n;
  cert.mode = Mode::exact;
  cert.param("n", std::to_string(n));
  const SumSet closed = closed_form_sums(n);
  const SumSet direct = direct_sums(n);
  // The claim is on the total absolute mismatch, zero exactly.
  Rational mismatch(0);
  std::string bad;
  for (int i = 0; i < 7; ++i) {
    const Rational diff = abs(closed[i] - direct[i]);
    if (diff != 0) bad += (bad.empty() ? "" : ",") + std::string("S") + std::to_string(i + 1);
    mismatch += diff;
  }
  settle(cert, Claim::eq(Rational(0)), Enclosure::point(mismatch));
  if (!bad.empty()) cert.note("mismatch in " + bad);
  if (printed_s2(n) != direct[1]) cert.note("printed S2 polynomial differs from the series");
  if (printed_s3(n) != direct[2]) cert.note("printed S3 polynomial differs from the series");
  return cert;
}

Certificate check_s5_lower(long n) {
  Certificate cert;
  cert.suite = "sums";
  cert.check_id = "sums/s5-lower/n=" + std::to_string(n);
  cert.index = n;
  cert.mode = Mode::exact;
  cert.param("n", std::to_string(n));
  settle(cert, Claim::ge(q(13863, 10000)), Enclosure::point(direct_sums(n)[4]));
  return cert;
}

Certificate check_s7_upper(long n) {
  Certificate cert;
  cert.suite = "sums";
  cert.check_id = "sums/s7-upper/n=" + std::to_string(n);
  cert.index = n;
  cert.mode = Mode::exact;
  cert.param("n", std::to_string(n));
  settle(cert, Claim::le(Rational(3) / (Rational(n) * n)), Enclosure::point(s7(n)));
  return cert;
}

}  // namespace qcv::verifier
