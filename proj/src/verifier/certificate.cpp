#include "qcv/verifier/certificate.hpp"

namespace qcv::verifier {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "Pass";
    case Verdict::fail: return "Fail";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::float64: return "float64";
    case Mode::interval: return "interval";
    case Mode::exact: return "exact";
  }
  return "?";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
    case Relation::in: return "in";
    case Relation::eq: return "==";
  }
  return "?";
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
}

Certificate& Certificate::note(const std::string& text) {
  if (!notes.empty()) notes += "; ";
  notes += text;
  return *this;
}

namespace {

Verdict decide_exact(const Claim& c, const Enclosure& e) {
  switch (c.relation) {
    case Relation::le:
      if (e.hi + c.margin <= c.value) return Verdict::pass;
      if (e.lo + c.margin > c.value) return Verdict::fail;
      return Verdict::inconclusive;
    case Relation::lt:
      if (e.hi + c.margin < c.value) return Verdict::pass;
      if (e.lo + c.margin >= c.value) return Verdict::fail;
      return Verdict::inconclusive;
    case Relation::ge:
      if (e.lo - c.margin >= c.value) return Verdict::pass;
      if (e.hi - c.margin < c.value) return Verdict::fail;
      return Verdict::inconclusive;
    case Relation::gt:
      if (e.lo - c.margin > c.value) return Verdict::pass;
      if (e.hi - c.margin <= c.value) return Verdict::fail;
      return Verdict::inconclusive;
    case Relation::in: {
      const Rational& up = c.upper.value();
      if (e.lo >= c.value && e.hi <= up) return Verdict::pass;
      if (e.hi < c.value || e.lo > up) return Verdict::fail;
      return Verdict::inconclusive;
    }
    case Relation::eq:
      if (e.lo == c.value && e.hi == c.value) return Verdict::pass;
      if (e.hi < c.value || e.lo > c.value || e.lo == e.hi) return Verdict::fail;
      return Verdict::inconclusive;
  }
  return Verdict::inconclusive;
}

}  // namespace

Verdict decide(const Claim& claim, const Enclosure& computed, Mode mode) {
  const Verdict v = decide_exact(claim, computed);
  if (mode == Mode::float64 && v == Verdict::pass) return Verdict::inconclusive;
  return v;
}

Certificate& settle(Certificate& cert, Claim claim, Enclosure computed) {
  cert.verdict = decide(claim, computed, cert.mode);
  cert.claimed = std::move(claim);
  cert.computed = std::move(computed);
  return cert;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

}  // namespace qcv::verifier
