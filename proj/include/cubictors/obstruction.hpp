#pragma once

#include <string>
#include <vector>

#include "cubictors/elliptic.hpp"
#include "cubictors/families.hpp"
#include "cubictors/ratfunc.hpp"

namespace cubictors {

/// v^2 = h(u) with h squarefree.
struct HyperCurve {
  std::string label;
  RationalPoly h;
  int genus() const { return (h.degree() - 1) / 2; }
  std::string to_string() const { return "v^2 = " + h.to_string("u"); }
};

/// The curve on which -27 k^2 = Delta_u lands after v = 9k / m(u).
struct ObstructionModel {
  HyperCurve curve;
  RationalPoly delta;  // Delta_u
  RationalPoly m;      // v = 9k / m(u)
};

/// Throws InvalidInput for a non-Kubert family and ContractViolation if the substitution
/// does not carry -27 k^2 = Delta_u to v^2 = h(u).
ObstructionModel obstruction_model(FamilyId id);
HyperCurve build_obstruction(FamilyId id);

struct HyperPoint {
  bool infinity = false;
  Rational u;
  Rational v;
  std::string to_string() const;
  friend bool operator==(const HyperPoint&, const HyperPoint&) = default;
};

/// All points with u = p/q, |p|, |q| <= H, plus the point at infinity for odd degree.
/// Affine points in increasing (u, v), infinity last.
std::vector<HyperPoint> search_rational_points(const HyperCurve& C, long H, int jobs = 1);

/// (u, v) -> (U(u), V(u) v).
struct CurveMap {
  RationalFunction U;
  RationalFunction V;
  CurveMap then(const CurveMap& next) const;
  bool is_identity() const;
  bool preserves(const RationalPoly& h) const;
};

struct SigmaPhiReport {
  bool sigma_preserves_curve = false;
  bool sigma_not_identity = false;
  bool sigma_cubed_identity = false;
  bool sigma_commutes_with_involution = false;
  bool phi_lands_on_quotient = false;  // y^2 = x^3 + 1 modulo v^2 = h(u)
  bool phi_sigma_invariant = false;
  bool ok() const {
    return sigma_preserves_curve && sigma_not_identity && sigma_cubed_identity && sigma_commutes_with_involution &&
           phi_lands_on_quotient && phi_sigma_invariant;
  }
};
CurveMap genus3_sigma();
SigmaPhiReport verify_sigma_and_phi();

struct Fiber {
  Rational x0;
  RationalPoly cubic;  // x(u) = x0 cleared of denominators
  std::vector<Rational> rational_roots;
};

struct FiberReport {
  TorsionGroup quotient_torsion;
  std::vector<CurvePoint> quotient_points;
  bool listed_points_exhaust = false;
  std::vector<Fiber> fibers;
  bool ok() const;
};
FiberReport fiber_analysis();

/// The curve y^2 = x^3 + 1 and the six points listed for it.
EllipticCurve quotient_curve();
std::vector<CurvePoint> quotient_listed_points();

/// Source of the completeness statement for C(Q); not re-proved here.
std::string completeness_citation(FamilyId id);

}  // namespace cubictors
