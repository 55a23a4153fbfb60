#include "qcv/orthopoly/hypergeometric.hpp"

#include <stdexcept>

namespace qcv::orthopoly {

std::vector<Rational> hypergeometric_gammas(int n, HalfInteger nu) {
  if (n < 0) throw std::invalid_argument("negative degree");
  const int m = n / 2;
  const Rational v = nu.value();
  const Rational b = v + (n % 2 == 0 ? m : m + 1);
  const Rational c = v + Rational(1, 2);
  std::vector<Rational> g(static_cast<size_t>(m) + 1);
  g[0] = 1;
  // |(-m)_i| (b)_i / (i! (c)_i), advanced term by term.
  for (int i = 0; i < m; ++i) g[i + 1] = g[i] * (Rational(m - i) * (b + i)) / (Rational(i + 1) * (c + i));
  return g;
}

Rational hypergeometric_full(int n, HalfInteger nu, const Rational& t) {
  const auto g = hypergeometric_gammas(n, nu);
  Rational s(0), p(1);
  for (size_t i = 0; i < g.size(); ++i) {
    s += (i % 2 == 0 ? g[i] : -g[i]) * p;
    p *= t;
  }
  return s;
}

std::optional<PartialSums> hypergeometric_partial_sums(int n, HalfInteger nu, const Rational& t, int j1, int j2) {
  if (j1 % 2 != 1 || j2 % 2 != 0 || j1 < 1 || j2 < 0) throw std::invalid_argument("need odd j1 and even j2");
  if (t < 0 || t > 1) throw std::invalid_argument("t outside [0,1]");
  const auto g = hypergeometric_gammas(n, nu);
  const int last = static_cast<int>(g.size()) - 1;

  PartialSums r;
  bool have_ratio = false;
  for (int i = std::min(j1, j2) + 1; i < last; ++i) {
    const Rational q = g[i] / g[i + 1];
    if (!have_ratio || q < r.min_ratio) r.min_ratio = q;
    have_ratio = true;
  }
  if (have_ratio && !(r.min_ratio > t)) return std::nullopt;
  if (!have_ratio) r.min_ratio = -1;  // nothing to check, the tail is at most one term

  auto partial = [&](int j) {
    Rational s(0), p(1);
    for (int i = 0; i <= std::min(j, last); ++i) {
      s += (i % 2 == 0 ? g[i] : -g[i]) * p;
      p *= t;
    }
    return s;
  };
  r.lower = partial(j1);
  r.upper = partial(j2);
  return r;
}

}  // namespace qcv::orthopoly
