#pragma once

// The two-idempotent knot surgery algebra K and its tensor powers.
//
// Corners:  I0*K*I0 = F2[u,v],   I1*K*I1 = F2[v,v^-1][[u]]  (after completion),
//           I0*K*I1 = 0,          I1*K*I0 = coeff*sigma + coeff*tau.
// Relations: sigma*f = I(f)*sigma,  tau*f = T(f)*tau, with I the localization
// inclusion and T(u) = v^-1, T(v) = u v^2. Coefficients are written to the
// LEFT of the connective and elements are kept in that normal form.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plumbcalc/ring.hpp"

namespace plumbcalc {

enum class Connective : uint8_t { None, Sigma, Tau };

// One K-factor of an arrow label. epsIn is the source generator's idempotent
// (the coefficient's right idempotent) and epsOut the target's.
struct KElt {
  uint8_t epsIn = 0;
  uint8_t epsOut = 0;
  Connective conn = Connective::None;
  RingElt coeff;

  KElt() = default;
  KElt(uint8_t in, uint8_t out, Connective c, RingElt f);

  bool isZero() const { return coeff.isZero(); }
  void validate() const;  // enforces the idempotent invariants

  static KElt idem(uint8_t eps) { return KElt(eps, eps, Connective::None, RingElt::one()); }
  static KElt poly(uint8_t eps, RingElt f) { return KElt(eps, eps, Connective::None, std::move(f)); }
  static KElt sigma(RingElt f = RingElt::one()) { return KElt(0, 1, Connective::Sigma, std::move(f)); }
  static KElt tau(RingElt f = RingElt::one()) { return KElt(0, 1, Connective::Tau, std::move(f)); }

  bool operator==(const KElt& o) const {
    if (isZero() && o.isZero()) return true;
    return epsIn == o.epsIn && epsOut == o.epsOut && conn == o.conn && coeff == o.coeff;
  }

  std::string str() const;
};

// Product a*b (b acts first; composability a.epsIn == b.epsOut required).
// Commutes b's coefficient past a's connective via I or T. Throws on
// non-composable idempotents. At most one factor carries a connective;
// sigma/tau composed with sigma/tau is zero (I1*K*I0 twice).
KElt k_mul(const KElt& a, const KElt& b, const Truncation& tr);

// Is the element an idempotent-diagonal unit (invertible coefficient,
// no connective)?
bool kIsUnit(const KElt& k);
KElt kInverse(const KElt& k, const Truncation& tr);

// ---------------------------------------------------------------------------
// TensorKElt: an elementary tensor in K^{otimes ell}; arrow labels of
// multi-factor type-D modules.
// ---------------------------------------------------------------------------
struct TensorKElt {
  std::vector<KElt> factors;

  TensorKElt() = default;
  explicit TensorKElt(std::vector<KElt> f) : factors(std::move(f)) {}
  static TensorKElt identity(std::span<const uint8_t> idems);

  int ell() const { return static_cast<int>(factors.size()); }
  bool isZero() const {
    for (const auto& f : factors)
      if (f.isZero()) return true;
    return factors.empty() ? false : false;
  }

  bool operator==(const TensorKElt&) const = default;
  std::string str() const;
};

TensorKElt t_mul(const TensorKElt& a, const TensorKElt& b, const Truncation& tr);

}  // namespace plumbcalc
