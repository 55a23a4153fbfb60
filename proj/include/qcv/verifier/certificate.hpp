#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcv/numerics/interval.hpp"
#include "qcv/numerics/rational.hpp"

namespace qcv::verifier {

using numerics::Interval;
using numerics::Rational;

enum class Verdict { pass, fail, inconclusive };
enum class Mode { float64, interval, exact };
enum class Relation { le, lt, ge, gt, in, eq };

std::string to_string(Verdict v);
std::string to_string(Mode m);
std::string to_string(Relation r);

// The claimed inequality: computed <relation> value, with an optional
// required margin (computed + margin <= value for le, and so on).
// For `in`, the claim is value <= computed <= upper.
struct Claim {
  Relation relation = Relation::le;
  Rational value;
  std::optional<Rational> upper;
  Rational margin;

  static Claim le(Rational v, Rational margin = Rational(0)) { return {Relation::le, std::move(v), {}, std::move(margin)}; }
  static Claim lt(Rational v) { return {Relation::lt, std::move(v), {}, Rational(0)}; }
  static Claim ge(Rational v, Rational margin = Rational(0)) { return {Relation::ge, std::move(v), {}, std::move(margin)}; }
  static Claim gt(Rational v) { return {Relation::gt, std::move(v), {}, Rational(0)}; }
  static Claim in(Rational lo, Rational hi) { return {Relation::in, std::move(lo), std::move(hi), Rational(0)}; }
  static Claim eq(Rational v) { return {Relation::eq, std::move(v), {}, Rational(0)}; }
};

// Exact enclosure of the computed quantity. MPFR endpoints are dyadic, so
// nothing is lost converting an Interval.
struct Enclosure {
  Rational lo;
  Rational hi;

  static Enclosure point(const Rational& q) { return {q, q}; }
  static Enclosure of(const Interval& i) { return {i.lo_rational(), i.hi_rational()}; }
  static Enclosure hull(const Enclosure& a, const Enclosure& b);
};

struct Certificate {
  std::string suite;
  std::string check_id;
  long index = 0;  // primary ordering key inside the suite
  std::vector<std::pair<std::string, std::string>> params;
  Claim claimed;
  Enclosure computed;
  Verdict verdict = Verdict::inconclusive;
  Mode mode = Mode::exact;
  int precision_bits = 0;  // 0 for exact rational checks
  std::optional<long> runtime_ms;
  std::string notes;

  Certificate& param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Certificate& note(const std::string& text);
};

// Verdict for a computed enclosure against a claim. float64 results can
// never Pass.
Verdict decide(const Claim& claim, const Enclosure& computed, Mode mode);

// Fills claimed/computed/verdict in one go.
Certificate& settle(Certificate& cert, Claim claim, Enclosure computed);

// Combined verdict: Fail beats Inconclusive beats Pass.
Verdict combine(Verdict a, Verdict b);

}  // namespace qcv::verifier
