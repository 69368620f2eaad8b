#include "plumbcalc/algebra.hpp"

#include <sstream>

namespace plumbcalc {

KElt::KElt(uint8_t in, uint8_t out, Connective c, RingElt f)
    : epsIn(in), epsOut(out), conn(c), coeff(std::move(f)) {
  validate();
}

void KElt::validate() const {
  if (coeff.isZero()) return;
  if (conn == Connective::None) {
    if (epsIn != epsOut) throw std::logic_error("KElt: connective-free element must be diagonal");
    if (epsIn == 0 && !coeff.isZero() && (coeff.uOrder() < 0 || coeff.vMinExp() < 0))
      throw std::logic_error("KElt: negative exponents in the (0,0) corner");
  } else {
    if (epsIn != 0 || epsOut != 1)
      throw std::logic_error("KElt: sigma/tau must go from idempotent 0 to 1");
  }
}

std::string KElt::str() const {
  if (coeff.isZero()) return "0";
  std::string s = coeff.str();
  if (conn == Connective::Sigma) s += "s";
  if (conn == Connective::Tau) s += "t";
  return s;
}

KElt k_mul(const KElt& a, const KElt& b, const Truncation& tr) {
  if (a.isZero() || b.isZero())
    return KElt(b.epsIn, a.epsOut, Connective::None, RingElt::zero());
  if (a.epsIn != b.epsOut)
    throw std::invalid_argument("k_mul: non-composable idempotents");
  if (a.conn != Connective::None && b.conn != Connective::None) {
    // Both pass through I1*K*I0; the composite factors through I0*K*I1 = 0.
    return KElt(0, 1, Connective::None, RingElt::zero());
  }
  if (b.conn == Connective::None && a.conn == Connective::None) {
    KElt r(b.epsIn, a.epsOut, Connective::None, a.coeff.mulT(b.coeff, tr));
    if (r.coeff.isZero()) r.conn = Connective::None;
    return r;
  }
  if (a.conn != Connective::None) {
    // a = f*conn with conn in I1*K*I0; b is a polynomial in the (0,0) corner.
    RingElt moved = (a.conn == Connective::Sigma) ? b.coeff : apply_T(b.coeff);
    return KElt(0, 1, a.conn, a.coeff.mulT(moved, tr));
  }
  // b = g*conn, a a Laurent coefficient in the (1,1) corner.
  return KElt(0, 1, b.conn, a.coeff.mulT(b.coeff, tr));
}

bool kIsUnit(const KElt& k) {
  if (k.conn != Connective::None || k.isZero()) return false;
  return k.epsIn == 0 ? isUnitCorner0(k.coeff) : isUnitCorner1(k.coeff);
}

KElt kInverse(const KElt& k, const Truncation& tr) {
  if (!kIsUnit(k)) throw std::domain_error("kInverse: not a unit");
  return KElt(k.epsIn, k.epsIn, Connective::None,
              series_invert(k.coeff, tr, k.epsIn == 1));
}

TensorKElt TensorKElt::identity(std::span<const uint8_t> idems) {
  TensorKElt t;
  t.factors.reserve(idems.size());
  for (uint8_t e : idems) t.factors.push_back(KElt::idem(e));
  return t;
}

std::string TensorKElt::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "|";
    os << factors[i].str();
  }
  return os.str();
}

TensorKElt t_mul(const TensorKElt& a, const TensorKElt& b, const Truncation& tr) {
  if (a.factors.size() != b.factors.size())
    throw std::invalid_argument("t_mul: mismatched tensor lengths");
  TensorKElt r;
  r.factors.reserve(a.factors.size());
  for (size_t i = 0; i < a.factors.size(); ++i)
    r.factors.push_back(k_mul(a.factors[i], b.factors[i], tr));
  return r;
}

}  // namespace plumbcalc
