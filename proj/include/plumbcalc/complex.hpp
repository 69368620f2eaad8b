#pragma once

// Free chain complexes over a local PID (F2[[U]] truncated, or the
// idempotent-1 corner F2((v))[[u]]), with unit cancellation, full reduction
// to 1-step/2-step normal form, homology modules and relative gradings.

#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plumbcalc/ring.hpp"

namespace plumbcalc {

// ---------------------------------------------------------------------------
// Ring policies.
// ---------------------------------------------------------------------------
struct URing {
  using Elt = UPoly;
  int cap = 32;

  bool isZero(const Elt& e) const { return e.isZero(); }
  bool isUnit(const Elt& e) const { return e.isUnit(); }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt mul(const Elt& a, const Elt& b) const { return a.mul(b, cap); }
  Elt inv(const Elt& a) const { return a.inverse(cap); }
  int valuation(const Elt& a) const { return a.valuation(); }
  // q/p where val(q) >= val(p) and p = U^k * unit.
  Elt divide(const Elt& q, const Elt& p) const {
    int k = p.valuation();
    Elt unit = p.shifted(-0, cap);  // placeholder, replaced below
    // shift p down by k to expose the unit part
    Elt w;
    for (int i = k; i <= p.degree(); ++i)
      if (p.bit(i)) w.setBit(i - k);
    Elt qq;
    for (int i = k; i <= q.degree(); ++i)
      if (q.bit(i)) qq.setBit(i - k);
    return qq.mul(w.inverse(cap), cap);
  }
  Elt uPower(int k) const { return k >= cap ? Elt::zero() : Elt::power(k); }
  std::string str(const Elt& e) const { return e.str(); }
};

struct LaurentRing {
  using Elt = RingElt;
  Truncation tr;

  bool isZero(const Elt& e) const { return e.isZero(); }
  bool isUnit(const Elt& e) const { return isUnitCorner1(e); }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt mul(const Elt& a, const Elt& b) const { return a.mulT(b, tr); }
  Elt inv(const Elt& a) const { return series_invert(a, tr, true); }
  int valuation(const Elt& a) const { return a.isZero() ? -1 : a.uOrder(); }
  Elt divide(const Elt& q, const Elt& p) const {
    int k = valuation(p);
    Elt w = p.scaledBy(Mono(-k, -k));  // divide by U^k = u^k v^k
    return mul(q.scaledBy(Mono(-k, -k)), series_invert(w, tr, true));
  }
  Elt uPower(int k) const { return RingElt::mono(k, k); }
  std::string str(const Elt& e) const { return e.str(); }
};

// ---------------------------------------------------------------------------
// Homology of a free complex over the local PID, read off the reduced model.
// Torsion orders >= `precision` are indistinguishable from towers at the
// working truncation and are reported as flagged towers.
// ---------------------------------------------------------------------------
struct TorsionPiece {
  int order = 0;
  std::optional<int> grade;  // grade of the generator of the quotient
  friend bool operator==(const TorsionPiece&, const TorsionPiece&) = default;
};

struct GradedUModule {
  int towers = 0;
  std::vector<std::optional<int>> towerGrades;
  std::vector<TorsionPiece> torsion;
  int precision = 0;      // orders below this are certified
  int grayTowers = 0;     // towers that came from torsion >= precision

  bool operator==(const GradedUModule& o) const {
    return towers == o.towers && torsion == o.torsion;
  }
};

// Compare ranks/torsion at a common certified precision, ignoring gradings.
bool sameAtPrecision(const GradedUModule& a, const GradedUModule& b, int* commonP = nullptr);
// Compare including relative gradings up to a single overall shift per side.
bool sameGradedAtPrecision(const GradedUModule& a, const GradedUModule& b);

// ---------------------------------------------------------------------------
// Strong deformation retraction data emitted by reduce_local:
//   pi : C -> Z,  incl : Z -> C,  h : C -> C  with
//   pi*incl = id, incl*pi = id + d h + h d, h^2 = 0, pi*h = 0, h*incl = 0.
// Columns are indexed by generator ids of the ORIGINAL complex (for h, pi)
// and of the REDUCED complex (for incl).
// ---------------------------------------------------------------------------
template <class Ring>
struct Retraction {
  using Elt = typename Ring::Elt;
  using Col = std::vector<std::pair<int, Elt>>;  // sorted by index
  std::vector<Col> incl;  // reduced gen -> original chains
  std::vector<Col> pi;    // original gen -> reduced chains
  std::vector<Col> h;     // original gen -> original chains
};

// ---------------------------------------------------------------------------
// FreeComplex
// ---------------------------------------------------------------------------
template <class Ring>
class FreeComplex {
 public:
  using Elt = typename Ring::Elt;

  explicit FreeComplex(Ring ring = Ring{}) : ring_(ring) {}

  const Ring& ring() const { return ring_; }

  int addGen(std::string label = {}, std::optional<int> grade = std::nullopt) {
    labels_.push_back(std::move(label));
    grades_.push_back(grade);
    alive_.push_back(true);
    rows_.emplace_back();
    cols_.emplace_back();
    return static_cast<int>(labels_.size()) - 1;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int aliveCount() const;
  bool alive(int g) const { return alive_[g]; }
  const std::string& label(int g) const { return labels_[g]; }
  std::optional<int> grade(int g) const { return grades_[g]; }
  void setGrade(int g, std::optional<int> gr) { grades_[g] = gr; }

  // XOR-accumulate an entry of the differential.
  void addEntry(int src, int tgt, const Elt& coeff);
  Elt entry(int src, int tgt) const;
  const std::map<int, Elt>& row(int src) const { return rows_[src]; }
  const std::map<int, Elt>& col(int tgt) const { return cols_[tgt]; }

  // d^2 == 0 up to truncation; on failure reports the first violating pair.
  bool dSquareCheck(std::pair<int, int>* violation = nullptr) const;

  // Cancel a single unit arrow x->y (throws if the pivot is not a unit).
  void cancelPair(int x, int y);

  // Cancel all unit arrows. If `ret` is non-null, builds the SDR data.
  void reduceUnits(Retraction<Ring>* ret = nullptr);

  // True if no remaining entry is a unit.
  bool isMinimal() const;

  // Full reduction per the local-PID classification: after reduceUnits,
  // split off 2-step pieces in increasing U-valuation. The complex is left
  // with only the tower generators (zero differential). Returns homology.
  GradedUModule reduceLocal(int precision, Retraction<Ring>* ret = nullptr);

  // reduceLocal on a copy (complex untouched).
  GradedUModule homology(int precision) const;

  // Relative grading propagation over a spanning tree of each component with
  // gr(target) = gr(source) - 1 + 2*val(coeff). Returns false (and reports
  // a violating cycle edge) if some cycle is inconsistent; such components
  // get no grades.
  bool assignRelativeGradings(std::string* report = nullptr);

  // Connected components of the generator-arrow graph (alive gens only).
  std::vector<std::vector<int>> components() const;

  // Apply an endomorphism matrix check: returns true if [d, F] == 0 where
  // F is given as a sparse column map.
  using SparseMap = std::map<int, std::map<int, Elt>>;  // src -> (tgt -> coeff)
  bool commutesWithDifferential(const SparseMap& F) const;

  int64_t arrowCount() const;

 private:
  void eraseGen(int g);

  Ring ring_;
  std::vector<std::string> labels_;
  std::vector<std::optional<int>> grades_;
  std::vector<bool> alive_;
  std::vector<std::map<int, Elt>> rows_;  // src -> tgt -> coeff
  std::vector<std::map<int, Elt>> cols_;  // tgt -> src -> coeff
};

using UComplex = FreeComplex<URing>;
using LaurentComplex = FreeComplex<LaurentRing>;

}  // namespace plumbcalc
