#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubictors/elliptic.hpp"
#include "cubictors/field.hpp"
#include "cubictors/ratfunc.hpp"

namespace cubictors {

enum class FamilyId { F13, F14_ISOG, F14_KUBERT7, F18_CYCLIC, F18_KUBERT9, F2x14, FIXED_49A3, FIXED_49A4 };

std::string to_string(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view label);
const std::vector<FamilyId>& all_families();
/// Families without a parameter (FIXED_* and F14_ISOG, which is the pair 49A3/49A4).
bool is_fixed(FamilyId id);

struct FamilyMember {
  std::string label;
  std::optional<Rational> parameter;
  EllipticCurve curve;  // over Q
  Field field;
  TorsionGroup expected_torsion;
  FieldClass expected_class;
  /// Torsion over Q where the family pins it down.
  std::optional<TorsionGroup> expected_rational_torsion;
};

/// Named coefficient of some family, parsed from its transcription in the data table.
/// Throws InvalidInput for an unknown name.
const RationalFunction& coefficient(std::string_view name);
std::vector<std::string> coefficient_names();
/// Coefficient evaluated at a rational; a pole is reported as Excluded.
Rational coefficient_at(std::string_view name, const Rational& u);

// Z/13 over cyclic cubic fields.
FamilyMember family_13(const Rational& u);
/// y^2 = x^3 + A13(t) U^2 x + B13(t) U^3.
EllipticCurve isogeny13_model(const Rational& t, const Rational& U);
Rational twist13_U(const Rational& t);
/// a3(t,U) x^3 + a2(t,U) x^2 + a1(t,U) x + a0(t,U).
RationalPoly isogeny13_cubic(const Rational& t, const Rational& U = Rational(1));

struct Twist13Check {
  bool beta_squared = false;  // x^3 + A t^-8 x + B t^-12 = a2 a^2 + a1 a + a0 in K_t
  bool twist = false;         // U (a2 a^2 + a1 a + a0) = (b1 a + b0)^2 in K_t
  bool holds() const { return beta_squared && twist; }
};
Twist13Check check_twist13_identity(const Rational& t);
bool verify_twist13_identity(const Rational& t);

// Z/14.
std::vector<FamilyMember> fixed_14();
EllipticCurve curve_49a3();
EllipticCurve curve_49a4();
Field zeta7_plus_field();

struct Modular14 {
  /// y^2 + (x^2 + x) y + x
  static FieldElement x1_equation(const FieldElement& x, const FieldElement& y);
  /// v^2 + (u + 3) v + u^3 + 6u + 8
  static FieldElement x0_equation(const FieldElement& u, const FieldElement& v);
};
/// The map X1(14) -> X0(14). Throws InvalidInput off the curve or where x y = 0.
std::pair<FieldElement, FieldElement> eval_phi(const FieldElement& x, const FieldElement& y);

FamilyMember family_14_kubert(const Rational& u);
EllipticCurve kubert7_curve(const Rational& u);
Rational kubert7_discriminant(const Rational& u);

// Z/18.
EllipticCurve isogeny9_model(const Rational& t, const Rational& U);
/// x + 81t^3 + 243t^2 + 243t + 81
RationalPoly three_torsion_linear_factor(const Rational& t);
EllipticCurve curve_with_rational_3torsion(const Rational& s);
RationalPoly cubic_factor_F(const Rational& s);
/// 2^12 3^4 (s^2 + 3s + 3)^2
Rational cubic_factor_F_disc_formula(const Rational& s);
/// s(u) = (u^3 - 3u^2) / (3u - 3).
Rational s_of_u(const Rational& u);
FamilyMember family_18_cyclic(const Rational& u);
FamilyMember family_18_kubert9(const Rational& u);
EllipticCurve kubert9_curve(const Rational& u);
Rational kubert9_discriminant(const Rational& u);

// Z/2 x Z/14.
FamilyMember family_2x14(const Rational& u);
EllipticCurve family_2x14_long(const Rational& u);
EllipticCurve family_2x14_short(const Rational& u);
RationalPoly family_2x14_field_poly(const Rational& t);

/// The intermediate short model E_t over K_t together with the printed 7-torsion point and
/// the printed change (p, q, r, s) taking E_t to the long model.
struct Printed2x14 {
  EllipticCurve curve;
  CurvePoint point;
  WeierstrassChange change;
};
Printed2x14 family_2x14_printed(const Rational& t);

/// Sign pattern of a Kubert family: I where the discriminant is negative, J where positive.
enum class Interval { I, J };
struct IntervalClass {
  RationalPoly cubic;             // u^3 - 8u^2 + 5u + 1 or u^3 - 6u^2 + 3u + 1
  std::array<double, 3> roots{};  // display only
  /// Decided exactly from signs of u, u - 1 and cubic(u). Throws Excluded at 0, 1 and roots.
  Interval locate(const Rational& u) const;
};
IntervalClass interval_class(FamilyId id);

/// Builds a member of any family. Fixed families ignore the parameter and F14_ISOG returns both.
std::vector<FamilyMember> make_members(FamilyId id, const std::optional<Rational>& parameter);

}  // namespace cubictors
