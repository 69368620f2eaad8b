#include "plumbcalc/ring.hpp"

#include <climits>
#include <sstream>

namespace plumbcalc {

std::string UPoly::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kMaxBits; ++i) {
    if (!bit(i)) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0)
      os << "1";
    else if (i == 1)
      os << "U";
    else
      os << "U^" << i;
  }
  return os.str();
}

int RingElt::uOrder() const {
  int best = INT_MAX;
  for (const Mono& m : terms_) best = std::min(best, static_cast<int>(m.uExp));
  return best;
}

int RingElt::vMinExp() const {
  int best = INT_MAX;
  for (const Mono& m : terms_) best = std::min(best, static_cast<int>(m.vExp));
  return best;
}

int RingElt::vMaxExp() const {
  int best = INT_MIN;
  for (const Mono& m : terms_) best = std::max(best, static_cast<int>(m.vExp));
  return best;
}

void RingElt::addInPlace(Mono m) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
  if (it != terms_.end() && *it == m)
    terms_.erase(it);
  else
    terms_.insert(it, m);
}

RingElt merge_xor(const RingElt& a, const RingElt& b) {
  RingElt r;
  r.truncated_ = a.truncated_ || b.truncated_;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                b.terms_.end(), std::back_inserter(r.terms_));
  return r;
}

RingElt RingElt::operator+(const RingElt& o) const { return merge_xor(*this, o); }

RingElt RingElt::scaledBy(Mono m) const {
  RingElt r;
  r.truncated_ = truncated_;
  r.terms_.reserve(terms_.size());
  for (const Mono& t : terms_) r.terms_.push_back(t * m);
  return r;  // order preserved under monomial translation
}

RingElt RingElt::mul(const RingElt& o) const {
  RingElt acc;
  acc.truncated_ = truncated_ || o.truncated_;
  for (const Mono& m : o.terms_) acc = merge_xor(acc, scaledBy(m));
  acc.truncated_ = truncated_ || o.truncated_;
  return acc;
}

RingElt RingElt::clipped(const Truncation& tr) const {
  RingElt r;
  r.truncated_ = truncated_;
  for (const Mono& m : terms_) {
    if (m.uExp >= tr.uTrunc || m.vExp < tr.vMin || m.vExp > tr.vMax)
      r.truncated_ = true;
    else
      r.terms_.push_back(m);
  }
  return r;
}

RingElt RingElt::mulT(const RingElt& o, const Truncation& tr) const {
  return mul(o).clipped(tr);
}

std::string RingElt::str(const char* u, const char* v) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Mono& m : terms_) {
    if (!first) os << "+";
    first = false;
    if (m.uExp == 0 && m.vExp == 0) {
      os << "1";
      continue;
    }
    if (m.uExp == 1) os << u;
    if (m.uExp > 1) os << u << "^" << m.uExp;
    if (m.vExp == 1) os << v;
    if (m.vExp != 0 && m.vExp != 1) os << v << "^" << m.vExp;
  }
  if (truncated_) os << "~";
  return os.str();
}

RingElt apply_T(const RingElt& f) {
  RingElt r;
  for (const Mono& m : f.terms()) {
    if (m.uExp < 0 || m.vExp < 0)
      throw std::domain_error("apply_T: input must lie in the idempotent-0 corner");
    r.addInPlace(Mono(m.vExp, 2 * m.vExp - m.uExp));
  }
  if (f.truncated()) r.markTruncated();
  return r;
}

RingElt formal_derivative(const RingElt& f, Var var) {
  RingElt r;
  for (const Mono& m : f.terms()) {
    if (var == Var::U) {
      if (m.uExp & 1) r.addInPlace(Mono(m.uExp - 1, m.vExp));
    } else {
      if (m.vExp & 1) r.addInPlace(Mono(m.uExp, m.vExp - 1));
    }
  }
  if (f.truncated()) r.markTruncated();
  return r;
}

RingElt euler_op(const RingElt& f) {
  // u*d_u(f) + v*d_v(f): keeps monomials whose u- and v-exponents have
  // opposite parities (uExp+vExp odd).
  RingElt r;
  for (const Mono& m : f.terms())
    if ((m.uExp + m.vExp) & 1) r.addInPlace(m);
  if (f.truncated()) r.markTruncated();
  return r;
}

bool isUnitCorner0(const RingElt& f) {
  for (const Mono& m : f.terms())
    if (m.uExp == 0 && m.vExp == 0) return true;
  return false;
}

bool isUnitCorner1(const RingElt& f) {
  for (const Mono& m : f.terms())
    if (m.uExp == 0) return true;
  return false;
}

RingElt series_invert(const RingElt& f, const Truncation& tr, bool corner1) {
  if (f.isZero()) throw std::domain_error("series_invert: zero is not a unit");
  if (!corner1) {
    if (!isUnitCorner0(f))
      throw std::domain_error("series_invert: no constant term (valuation " +
                              std::to_string(f.uOrder()) + " in u)");
    // f = 1 + h with h in the maximal ideal; geometric series.
    RingElt h = f + RingElt::one();
    RingElt acc = RingElt::one(), pw = RingElt::one();
    // Each extra factor of h raises total degree; the window bounds the loop.
    int steps = tr.uTrunc + (tr.vMax - std::min(0, tr.vMin)) + 2;
    for (int i = 0; i < steps; ++i) {
      pw = pw.mulT(h, tr);
      if (pw.isZero()) break;
      acc += pw;
    }
    return acc.clipped(tr);
  }
  // Idempotent-1 corner: F2((v))[[u]]. Factor out the leading v-power of the
  // u-order-0 part; demand that part be nonzero.
  if (!isUnitCorner1(f)) {
    throw std::domain_error("series_invert: u-order " + std::to_string(f.uOrder()) +
                            " > 0, not a unit in F2((v))[[u]]");
  }
  int m = INT_MAX;
  for (const Mono& t : f.terms())
    if (t.uExp == 0) m = std::min(m, static_cast<int>(t.vExp));
  // f = v^m (1 + h) with h of positive (u,v)-order in the displayed sense.
  RingElt g = f.scaledBy(Mono(0, -m));
  RingElt h = g + RingElt::one();
  RingElt acc = RingElt::one(), pw = RingElt::one();
  int steps = tr.uTrunc + (tr.vMax - tr.vMin) + 2;
  for (int i = 0; i < steps; ++i) {
    pw = pw.mulT(h, tr);
    if (pw.isZero()) break;
    acc += pw;
  }
  return acc.scaledBy(Mono(0, -m)).clipped(tr);
}

}  // namespace plumbcalc
