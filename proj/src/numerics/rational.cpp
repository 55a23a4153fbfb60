#include "qcv/numerics/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qcv::numerics {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

Rational scale10(const Rational& q, long e) {
  if (e >= 0) return q * Rational(pow10(e));
  return q / Rational(pow10(-e));
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  }

  long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string::npos) {
    exponent = std::stol(s.substr(epos + 1));
    s = s.substr(0, epos);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("bad decimal literal");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("bad decimal literal: " + std::string(text));
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal literal");
  Rational q(Integer(digits, 10));
  q = scale10(q, exponent - frac_digits);
  return negative ? Rational(-q) : q;
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits, Direction dir) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (sgn(q) == 0) return "0";
  Rational mag = abs(q);
  long e = static_cast<long>(mpz_sizeinbase(mag.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(mag.get_den_mpz_t(), 10));
  // sizeinbase may overshoot by one; settle e so that 10^e <= mag < 10^(e+1).
  while (mag < scale10(Rational(1), e)) --e;
  while (mag >= scale10(Rational(1), e + 1)) ++e;

  Rational scaled = scale10(q, digits - 1 - e);
  Integer m;
  switch (dir) {
    case Direction::down: m = floor_of(scaled); break;
    case Direction::up: m = ceil_of(scaled); break;
    case Direction::nearest: m = floor_of(scaled + Rational(1, 2)); break;
  }
  // Rounding can carry into a new digit (9.99 -> 10.0).
  std::string body = Integer(abs(m)).get_str();
  long exp10 = e;
  if (static_cast<int>(body.size()) > digits) {
    ++exp10;
  }
  std::string out = sgn(m) < 0 ? "-" : "";
  if (body == "0") return "0";
  out += body.substr(0, 1);
  std::string rest = body.substr(1);
  while (!rest.empty() && rest.back() == '0') rest.pop_back();
  if (!rest.empty()) out += "." + rest;
  if (exp10 != 0) out += "e" + std::to_string(exp10);
  return out;
}

double to_double(const Rational& q) {
  // mpq_get_d truncates; fine for reporting, never used for bounds.
  return q.get_d();
}

Rational pochhammer(const Rational& x, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer needs n >= 0");
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= x + i;
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial needs n >= 0");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

}  // namespace qcv::numerics
