#pragma once

// Coefficient arithmetic for the surgery algebra and its completions.
//
// Three rings show up everywhere:
//   * F2[U]/U^N            -- dense bit-packed, used by the lattice kernel (UPoly)
//   * F2[[u,v]]            -- idempotent-0 corner of the knot algebra (RingElt)
//   * F2((v))[[u]]         -- idempotent-1 corner, Laurent in v (RingElt)
// Everything is characteristic 2, so addition is XOR and there are no signs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace plumbcalc {

// ---------------------------------------------------------------------------
// Truncation settings shared by a whole computation.
// uTrunc: monomials with u-exponent >= uTrunc are discarded (flagged).
// vMin/vMax: retained window of v-exponents in idempotent-1 contexts.
// ---------------------------------------------------------------------------
struct Truncation {
  int uTrunc = 32;
  int vMin = -40;
  int vMax = 40;

  Truncation() = default;
  Truncation(int n, int lo, int hi) : uTrunc(n), vMin(lo), vMax(hi) {}
  bool operator==(const Truncation&) const = default;
};

// ---------------------------------------------------------------------------
// UPoly: element of F2[U] / U^cap with cap <= 128. Bit i = coefficient of U^i.
// ---------------------------------------------------------------------------
class UPoly {
 public:
  static constexpr int kMaxBits = 128;

  UPoly() : w_{0, 0} {}
  static UPoly zero() { return UPoly(); }
  static UPoly one() { return power(0); }
  static UPoly power(int k) {
    UPoly p;
    if (k < 0) throw std::invalid_argument("UPoly::power: negative exponent");
    if (k < 64)
      p.w_[0] = uint64_t{1} << k;
    else if (k < kMaxBits)
      p.w_[1] = uint64_t{1} << (k - 64);
    return p;  // k >= kMaxBits: truncated to zero
  }

  bool isZero() const { return (w_[0] | w_[1]) == 0; }
  bool isUnit() const { return w_[0] & 1; }  // nonzero constant term
  bool operator==(const UPoly&) const = default;

  bool bit(int i) const {
    if (i < 0 || i >= kMaxBits) return false;
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void setBit(int i) {
    if (i < 0 || i >= kMaxBits) return;
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }

  // Lowest set exponent, or -1 for zero.
  int valuation() const {
    if (w_[0]) return __builtin_ctzll(w_[0]);
    if (w_[1]) return 64 + __builtin_ctzll(w_[1]);
    return -1;
  }
  int degree() const {
    if (w_[1]) return 127 - __builtin_clzll(w_[1]);
    if (w_[0]) return 63 - __builtin_clzll(w_[0]);
    return -1;
  }

  UPoly& operator+=(const UPoly& o) {
    w_[0] ^= o.w_[0];
    w_[1] ^= o.w_[1];
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }

  // Multiply, truncating exponents >= cap.
  UPoly mul(const UPoly& o, int cap) const {
    UPoly r;
    for (int i = 0; i < 2; ++i) {
      uint64_t bits = w_[i];
      while (bits) {
        int k = 64 * i + __builtin_ctzll(bits);
        bits &= bits - 1;
        r += o.shifted(k, cap);
      }
    }
    return r;
  }

  UPoly shifted(int k, int cap) const {
    UPoly r;
    cap = std::min(cap, kMaxBits);
    for (int i = 0; i < kMaxBits && i + k < cap; ++i)
      if (bit(i)) r.setBit(i + k);
    return r;
  }

  UPoly truncated(int cap) const { return shifted(0, cap); }

  // Inverse of a unit mod U^cap (Newton iteration, quadratic convergence).
  UPoly inverse(int cap) const {
    if (!isUnit()) throw std::domain_error("UPoly::inverse: not a unit");
    UPoly x = one();
    for (int prec = 1; prec < cap; prec *= 2) {
      int p2 = std::min(2 * prec, cap);
      UPoly e = one() + mul(x, p2);   // e = 1 + a*x
      x += x.mul(e, p2);              // x' = x(1+e)
    }
    return x.truncated(cap);
  }

  std::string str() const;

 private:
  uint64_t w_[2];
};

// ---------------------------------------------------------------------------
// Mono: monomial u^a v^b (F2 coefficient understood).
// a >= 0 always; b may be negative only in idempotent-1 contexts.
// ---------------------------------------------------------------------------
struct Mono {
  int16_t uExp = 0;
  int16_t vExp = 0;

  Mono() = default;
  Mono(int a, int b) : uExp(static_cast<int16_t>(a)), vExp(static_cast<int16_t>(b)) {}
  friend bool operator==(const Mono&, const Mono&) = default;
  friend auto operator<=>(const Mono& l, const Mono& r) {
    if (auto c = l.uExp <=> r.uExp; c != 0) return c;
    return l.vExp <=> r.vExp;
  }
  Mono operator*(const Mono& o) const { return Mono(uExp + o.uExp, vExp + o.vExp); }
};

// ---------------------------------------------------------------------------
// RingElt: F2-sum of monomials, kept sorted and duplicate-free.
// `truncated` records that terms were discarded by the truncation window;
// exact arithmetic on exact inputs keeps the flag clear.
// ---------------------------------------------------------------------------
class RingElt {
 public:
  RingElt() = default;
  explicit RingElt(Mono m) : terms_{m} {}

  static RingElt zero() { return RingElt(); }
  static RingElt one() { return RingElt(Mono(0, 0)); }
  static RingElt mono(int a, int b) { return RingElt(Mono(a, b)); }

  const std::vector<Mono>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool truncated() const { return truncated_; }
  void markTruncated() { truncated_ = true; }

  bool operator==(const RingElt& o) const {
    return terms_ == o.terms_;  // truncation flag is advisory
  }

  bool isMonomial() const { return terms_.size() == 1; }
  Mono leading() const { return terms_.back(); }

  // Smallest u-exponent present (INT_MAX for 0).
  int uOrder() const;
  // Smallest / largest v-exponent present.
  int vMinExp() const;
  int vMaxExp() const;

  void addInPlace(Mono m);  // XOR one monomial
  RingElt operator+(const RingElt& o) const;
  RingElt& operator+=(const RingElt& o) { return *this = *this + o; }

  // Product with truncation applied (terms with uExp >= tr.uTrunc or
  // vExp outside [tr.vMin, tr.vMax] are dropped and the result is flagged).
  RingElt mulT(const RingElt& o, const Truncation& tr) const;
  // Exact product (no truncation). Exponent overflow guarded by int16 width.
  RingElt mul(const RingElt& o) const;

  RingElt scaledBy(Mono m) const;  // exact monomial multiple

  // Drop terms outside the window; flags the element if anything was cut.
  RingElt clipped(const Truncation& tr) const;

  std::string str(const char* u = "u", const char* v = "v") const;

 private:
  std::vector<Mono> terms_;
  bool truncated_ = false;
  friend RingElt merge_xor(const RingElt& a, const RingElt& b);
};

// u^i v^j  ->  v^{-i} (u v^2)^j = u^j v^{2j-i}
// Rejects negative input exponents (domain is the idempotent-0 corner).
RingElt apply_T(const RingElt& f);

// Monomial-wise derivative mod 2 with respect to u or v.
enum class Var { U, V };
RingElt formal_derivative(const RingElt& f, Var var);

// Carry of the Euler-type operator u*d_u + v*d_v (parity of total degree
// weighted per variable); used by the pair-of-pants correction.
RingElt euler_op(const RingElt& f);

// Unit test in the idempotent-0 corner: constant term 1.
bool isUnitCorner0(const RingElt& f);
// Unit test in the idempotent-1 corner: u-order-0 Laurent part is nonzero.
bool isUnitCorner1(const RingElt& f);

// Inverse of a unit up to the stated truncation. `corner1` selects the
// Laurent-series convention (v invertible). Throws std::domain_error with
// the failing valuation reported for non-units.
RingElt series_invert(const RingElt& f, const Truncation& tr, bool corner1);

}  // namespace plumbcalc
