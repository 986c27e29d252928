#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubictors/field.hpp"

namespace cubictors {

/// Silverman's (u, r, s, t): x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
struct WeierstrassChange {
  FieldElement u = FieldElement(1);
  FieldElement r;
  FieldElement s;
  FieldElement t;

  static WeierstrassChange identity() { return {}; }
  /// First this, then `next`.
  WeierstrassChange then(const WeierstrassChange& next) const;
  WeierstrassChange inverse() const;
};

struct CurvePoint {
  bool infinity = true;
  FieldElement x;
  FieldElement y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(FieldElement x, FieldElement y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  std::string to_string() const;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q or a cubic field.
class EllipticCurve {
 public:
  /// Coefficients in the order a1, a2, a3, a4, a6. Throws SingularCurve when the discriminant vanishes.
  EllipticCurve(Field K, std::array<FieldElement, 5> a);
  static EllipticCurve short_form(Field K, const FieldElement& A, const FieldElement& B);

  const Field& field() const { return K_; }
  const std::array<FieldElement, 5>& a() const { return a_; }
  const FieldElement& a1() const { return a_[0]; }
  const FieldElement& a2() const { return a_[1]; }
  const FieldElement& a3() const { return a_[2]; }
  const FieldElement& a4() const { return a_[3]; }
  const FieldElement& a6() const { return a_[4]; }

  FieldElement b2() const;
  FieldElement b4() const;
  FieldElement b6() const;
  FieldElement b8() const;
  FieldElement c4() const;
  FieldElement c6() const;
  const FieldElement& discriminant() const { return disc_; }
  FieldElement j_invariant() const;

  bool is_short() const { return a_[0].is_zero() && a_[1].is_zero() && a_[2].is_zero(); }
  /// All coefficients rational.
  bool has_rational_coefficients() const;
  /// Same equation viewed over a larger field K (or back over Q when coefficients allow).
  EllipticCurve over(const Field& K) const;

  bool contains(const CurvePoint& P) const;
  EllipticCurve change(const WeierstrassChange& w) const;

  std::string to_string() const;
  friend bool operator==(const EllipticCurve& a, const EllipticCurve& b) { return a.a_ == b.a_; }

 private:
  Field K_;
  std::array<FieldElement, 5> a_;
  FieldElement disc_;
};

/// P on E mapped to the model E.change(w).
CurvePoint transport(const WeierstrassChange& w, const CurvePoint& P);

CurvePoint point_neg(const EllipticCurve& E, const CurvePoint& P);
/// Throws InvalidInput when an input point is off the curve.
CurvePoint point_add(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint point_mul(const EllipticCurve& E, long n, const CurvePoint& P);
/// Smallest n <= bound with nP = O.
std::optional<long> point_order(const EllipticCurve& E, const CurvePoint& P, long bound = 100);

/// y^2 = x^3 - c4/48 x - c6/864 together with the change from E to it.
std::pair<EllipticCurve, WeierstrassChange> short_model(const EllipticCurve& E);

/// y^2 = x^3 + A U^2 x + B U^3 for a short model. Throws InvalidInput for U = 0 or a long model.
EllipticCurve quadratic_twist(const EllipticCurve& E, const FieldElement& U);
/// (x, y) on E to (U x, U^(3/2) y) on the twist; needs a square root of U^3, supplied as `root`.
CurvePoint twist_point(const CurvePoint& P, const FieldElement& U, const FieldElement& u_cubed_root);

/// psi_n for odd n; for even n, psi_n / (2y) times (x^3 + Ax + B), so the roots are exactly
/// the x-coordinates of the nonzero n-torsion. Needs a short model with rational coefficients.
RationalPoly division_polynomial(const EllipticCurve& E, int n);

/// Z/a x Z/b with a | b.
struct TorsionGroup {
  int a = 1;
  int b = 1;
  int order() const { return a * b; }
  std::string to_string() const;
  static std::optional<TorsionGroup> parse(std::string_view text);
  friend bool operator==(const TorsionGroup&, const TorsionGroup&) = default;
};

const std::vector<TorsionGroup>& mazur_groups();
const std::vector<TorsionGroup>& najman_groups();
bool in_mazur_list(const TorsionGroup& g);
bool in_najman_list(const TorsionGroup& g);
/// Componentwise divisibility a | a', b | b'.
bool divides(const TorsionGroup& small, const TorsionGroup& big);

struct TorsionData {
  TorsionGroup group;
  /// Every torsion point on the input model, O first, then ordered by (order, coordinates).
  std::vector<CurvePoint> points;
};

/// Torsion of a curve with rational coefficients over K (Q when K is null).
/// Throws ContractViolation if the group falls outside the Mazur/Najman list.
TorsionData torsion_points(const EllipticCurve& E, const Field& K, const RootOptions& opts = {});
TorsionGroup torsion_subgroup(const EllipticCurve& E, const Field& K, const RootOptions& opts = {});

/// A change taking E1 to E2 with coefficients in K, if one exists.
std::optional<WeierstrassChange> is_isomorphic_over(const EllipticCurve& E1, const EllipticCurve& E2, const Field& K,
                                                    const RootOptions& opts = {});

struct Normalization {
  EllipticCurve curve;  ///< model over Q
  WeierstrassChange change;
};

/// Moves P, 2P, 4P to y = 0 and 3P, 5P, 6P to y = -x. P must have order 7.
/// Throws ContractViolation when the resulting coefficients are not rational.
Normalization bn_normalize(const EllipticCurve& E, const CurvePoint& P);

}  // namespace cubictors
