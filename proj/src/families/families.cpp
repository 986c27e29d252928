#include "cubictors/families.hpp"

#include <algorithm>

#include "cubictors/errors.hpp"

namespace cubictors {

namespace {

const char* const kLabels[] = {"F13",         "F14_ISOG", "F14_KUBERT7", "F18_CYCLIC",
                               "F18_KUBERT9", "F2x14",    "FIXED_49A3",  "FIXED_49A4"};

std::string at(const Rational& u) { return " at " + u.to_string(); }

Field field_or_excluded(const RationalPoly& f, const Rational& u) {
  if (f.degree() != 3) throw Excluded("field polynomial drops degree" + at(u));
  if (!is_irreducible_low_degree(f)) throw Excluded("field polynomial " + f.to_string() + " is reducible" + at(u));
  return CubicField::create(f);
}

EllipticCurve curve_or_excluded(const std::array<Rational, 5>& a, const Rational& u) {
  try {
    return EllipticCurve(nullptr, {a[0], a[1], a[2], a[3], a[4]});
  } catch (const SingularCurve&) {
    throw Excluded("singular curve" + at(u));
  }
}

RationalPoly cubic_from(const std::string& prefix, const Rational& u) {
  return RationalPoly({coefficient_at(prefix + ".a0", u), coefficient_at(prefix + ".a1", u),
                       coefficient_at(prefix + ".a2", u), coefficient_at(prefix + ".a3", u)});
}

FieldClass kubert_class(const Rational& disc) {
  return {disc.sign() < 0 ? GaloisType::Complex : GaloisType::TotallyRealNonGalois, false};
}

constexpr FieldClass kCyclic{GaloisType::Cyclic, false};

}  // namespace

std::string to_string(FamilyId id) { return kLabels[static_cast<int>(id)]; }

std::optional<FamilyId> parse_family(std::string_view label) {
  for (int i = 0; i < 8; ++i)
    if (label == kLabels[i]) return static_cast<FamilyId>(i);
  return std::nullopt;
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids{FamilyId::F13,         FamilyId::F14_ISOG, FamilyId::F14_KUBERT7,
                                         FamilyId::F18_CYCLIC,  FamilyId::F18_KUBERT9, FamilyId::F2x14,
                                         FamilyId::FIXED_49A3,  FamilyId::FIXED_49A4};
  return ids;
}

bool is_fixed(FamilyId id) {
  return id == FamilyId::F14_ISOG || id == FamilyId::FIXED_49A3 || id == FamilyId::FIXED_49A4;
}

// ---- Z/13 ----

EllipticCurve isogeny13_model(const Rational& t, const Rational& U) {
  if (t.is_zero()) throw Excluded("t = 0 is excluded from the 13-isogeny family");
  if (U.is_zero()) throw Excluded("twist parameter U must be nonzero");
  const Rational U2 = U * U;
  return curve_or_excluded({0, 0, 0, coefficient_at("ISO13.A", t) * U2, coefficient_at("ISO13.B", t) * U2 * U}, t);
}

Rational twist13_U(const Rational& t) {
  if (t.is_zero()) throw Excluded("t = 0 is excluded from the 13-isogeny family");
  return coefficient_at("ISO13.U", t);
}

RationalPoly isogeny13_cubic(const Rational& t, const Rational& U) {
  return RationalPoly({coefficient_at("ISO13.a0", t) * U * U * U, coefficient_at("ISO13.a1", t) * U * U,
                       coefficient_at("ISO13.a2", t) * U, coefficient_at("ISO13.a3", t)});
}

Twist13Check check_twist13_identity(const Rational& t) {
  const EllipticCurve E = isogeny13_model(t, 1);
  const Field K = field_or_excluded(isogeny13_cubic(t, 1), t);
  const FieldElement a = FieldElement::generator(K);
  const Rational t4 = t.pow(4);
  // The printed cubic has root x(P) / t^4, so the y^2 identity lives on the t^4-rescaled model.
  const FieldElement A = E.a4().coords()[0] / t4.pow(2);
  const FieldElement B = E.a6().coords()[0] / t4.pow(3);
  const FieldElement beta2 = FieldElement(coefficient_at("ISO13.beta2", t)) * a * a +
                             FieldElement(coefficient_at("ISO13.beta1", t)) * a +
                             FieldElement(coefficient_at("ISO13.beta0", t));
  Twist13Check out;
  out.beta_squared = ((a * a + A) * a + B) == beta2;
  const FieldElement root = FieldElement(coefficient_at("ISO13.b1", t)) * a + FieldElement(coefficient_at("ISO13.b0", t));
  out.twist = FieldElement(twist13_U(t)) * beta2 == root * root;
  return out;
}

bool verify_twist13_identity(const Rational& t) { return check_twist13_identity(t).holds(); }

FamilyMember family_13(const Rational& u) {
  if (u.is_zero()) throw Excluded("u = 0 is excluded from F13");
  const Rational A = coefficient_at("F13.A", u);
  const Rational B = coefficient_at("F13.B", u);
  EllipticCurve E = curve_or_excluded({0, 0, 0, A, B}, u);
  Field K = field_or_excluded(cubic_from("F13", u), u);
  return {"F13", u, std::move(E), std::move(K), {1, 13}, kCyclic, std::nullopt};
}

// ---- Z/14 ----

Field zeta7_plus_field() {
  static const Field K = CubicField::create(RationalPoly({-1, -1, 2, 1}));
  return K;
}

EllipticCurve curve_49a3() { return EllipticCurve(nullptr, {1, -1, 0, -107, 552}); }
EllipticCurve curve_49a4() { return EllipticCurve(nullptr, {1, -1, 0, -1822, 30393}); }

std::vector<FamilyMember> fixed_14() {
  return {
      {"FIXED_49A3", std::nullopt, curve_49a3(), zeta7_plus_field(), {1, 14}, kCyclic, TorsionGroup{1, 2}},
      {"FIXED_49A4", std::nullopt, curve_49a4(), zeta7_plus_field(), {1, 14}, kCyclic, TorsionGroup{1, 2}},
  };
}

FieldElement Modular14::x1_equation(const FieldElement& x, const FieldElement& y) {
  return y * y + (x * x + x) * y + x;
}

FieldElement Modular14::x0_equation(const FieldElement& u, const FieldElement& v) {
  return v * v + (u + FieldElement(3)) * v + u * u * u + FieldElement(6) * u + FieldElement(8);
}

std::pair<FieldElement, FieldElement> eval_phi(const FieldElement& x, const FieldElement& y) {
  if (!Modular14::x1_equation(x, y).is_zero()) throw InvalidInput("point is not on X1(14)");
  if (x.is_zero() || y.is_zero()) throw InvalidInput("phi is undefined where x y = 0");
  const FieldElement one(1);
  FieldElement u = (-one - y + y * y * y) / (y * y);
  FieldElement v = (-one - x * x - x * x * x - y - y * y * y - FieldElement(3) * x * y - x * y * y) / (x * y);
  return {std::move(u), std::move(v)};
}

EllipticCurve kubert7_curve(const Rational& u) {
  return curve_or_excluded({coefficient_at("K7.a1", u), coefficient_at("K7.a2", u), coefficient_at("K7.a3", u), 0, 0},
                           u);
}

Rational kubert7_discriminant(const Rational& u) { return coefficient_at("K7.disc", u); }

FamilyMember family_14_kubert(const Rational& u) {
  const Rational disc = kubert7_discriminant(u);
  if (disc.is_zero()) throw Excluded("discriminant vanishes" + at(u));
  EllipticCurve E = kubert7_curve(u);
  Field K = field_or_excluded(RationalPoly({coefficient_at("K7.fB", u), coefficient_at("K7.fA", u), 0, 1}), u);
  return {"F14_KUBERT7", u, std::move(E), std::move(K), {1, 14}, kubert_class(disc), TorsionGroup{1, 7}};
}

// ---- Z/18 ----

EllipticCurve isogeny9_model(const Rational& t, const Rational& U) {
  if (U.is_zero()) throw Excluded("twist parameter U must be nonzero");
  const Rational U2 = U * U;
  return curve_or_excluded({0, 0, 0, coefficient_at("ISO9.A", t) * U2, coefficient_at("ISO9.B", t) * U2 * U}, t);
}

RationalPoly three_torsion_linear_factor(const Rational& t) { return RationalPoly({coefficient_at("ISO9.lin", t), 1}); }

EllipticCurve curve_with_rational_3torsion(const Rational& s) {
  if (s == Rational(-1)) throw Excluded("s = -1 is excluded");
  return curve_or_excluded({0, 0, 0, coefficient_at("S3.A", s), coefficient_at("S3.B", s)}, s);
}

RationalPoly cubic_factor_F(const Rational& s) {
  return RationalPoly({coefficient_at("S3.F0", s), coefficient_at("S3.F1", s), coefficient_at("S3.F2", s), 1});
}

Rational cubic_factor_F_disc_formula(const Rational& s) { return coefficient_at("S3.Fdisc", s); }

Rational s_of_u(const Rational& u) { return coefficient_at("S3.s", u); }

FamilyMember family_18_cyclic(const Rational& u) {
  const Rational s = s_of_u(u);
  if (s == Rational(-1)) throw Excluded("s(u) = -1" + at(u));
  EllipticCurve E = curve_or_excluded({0, 0, 0, coefficient_at("F18.A", u), coefficient_at("F18.B", u)}, u);
  Field K = field_or_excluded(cubic_from("F18", u), u);
  return {"F18_CYCLIC", u, std::move(E), std::move(K), {1, 18}, kCyclic, TorsionGroup{1, 6}};
}

EllipticCurve kubert9_curve(const Rational& u) {
  return curve_or_excluded({coefficient_at("K9.a1", u), coefficient_at("K9.a2", u), coefficient_at("K9.a3", u), 0, 0},
                           u);
}

Rational kubert9_discriminant(const Rational& u) { return coefficient_at("K9.disc", u); }

FamilyMember family_18_kubert9(const Rational& u) {
  const Rational disc = kubert9_discriminant(u);
  if (disc.is_zero()) throw Excluded("discriminant vanishes" + at(u));
  EllipticCurve E = kubert9_curve(u);
  Field K = field_or_excluded(RationalPoly({coefficient_at("K9.fB", u), coefficient_at("K9.fA", u), 0, 1}), u);
  return {"F18_KUBERT9", u, std::move(E), std::move(K), {1, 18}, kubert_class(disc), TorsionGroup{1, 9}};
}

// ---- Z/2 x Z/14 ----

RationalPoly family_2x14_field_poly(const Rational& t) {
  return RationalPoly({coefficient_at("F2x14.f0", t), coefficient_at("F2x14.f1", t), coefficient_at("F2x14.f2", t),
                       coefficient_at("F2x14.f3", t)});
}

EllipticCurve family_2x14_long(const Rational& u) {
  if (u * u == Rational(1)) throw Excluded("u = +-1 is excluded from F2x14");
  return curve_or_excluded(
      {1, coefficient_at("F2x14.A2", u), 0, coefficient_at("F2x14.A4", u), coefficient_at("F2x14.A6", u)}, u);
}

EllipticCurve family_2x14_short(const Rational& u) {
  if (u * u == Rational(1)) throw Excluded("u = +-1 is excluded from F2x14");
  return curve_or_excluded({0, 0, 0, coefficient_at("F2x14.A", u), coefficient_at("F2x14.B", u)}, u);
}

FamilyMember family_2x14(const Rational& u) {
  EllipticCurve E = family_2x14_long(u);
  Field K = field_or_excluded(family_2x14_field_poly(u), u);
  return {"F2x14", u, std::move(E), std::move(K), {2, 14}, kCyclic, std::nullopt};
}

Printed2x14 family_2x14_printed(const Rational& t) {
  const EllipticCurve L = family_2x14_long(t);
  const Field K = field_or_excluded(family_2x14_field_poly(t), t);
  const FieldElement a = FieldElement::generator(K);
  auto in_alpha = [&](const std::string& name) {
    return FieldElement(coefficient_at(name + ".2", t)) * a * a + FieldElement(coefficient_at(name + ".1", t)) * a +
           FieldElement(coefficient_at(name + ".0", t));
  };
  // x_long = p^2 x + r, y_long = p^3 y + p^2 q x + s, i.e. (u, r, s, t) = (p, r, q, s).
  WeierstrassChange w;
  w.u = in_alpha("F2x14.p");
  w.r = FieldElement(coefficient_at("F2x14.r", t)).in(K);
  w.s = FieldElement(coefficient_at("F2x14.q", t)).in(K);
  w.t = FieldElement(coefficient_at("F2x14.s", t)).in(K);
  if (w.u.is_zero()) throw Excluded("p vanishes" + at(t));
  EllipticCurve Et = L.over(K).change(w);
  CurvePoint P = CurvePoint::affine(in_alpha("F2x14.x1"), in_alpha("F2x14.y1"));
  return {std::move(Et), std::move(P), std::move(w)};
}

// ---- intervals ----

Interval IntervalClass::locate(const Rational& u) const {
  const int c = cubic(u).sign();
  if (u.is_zero() || u == Rational(1) || c == 0) throw Excluded("u" + at(u) + " is a boundary point");
  // r1 < 0 < r2 < 1 < r3 and the cubic is monic.
  if (u.sign() < 0) return c < 0 ? Interval::I : Interval::J;
  if (u < Rational(1)) return c > 0 ? Interval::I : Interval::J;
  return c < 0 ? Interval::I : Interval::J;
}

IntervalClass interval_class(FamilyId id) {
  IntervalClass ic;
  if (id == FamilyId::F14_KUBERT7) {
    ic.cubic = coefficient("K7.interval").numerator();
  } else if (id == FamilyId::F18_KUBERT9) {
    ic.cubic = coefficient("K9.interval").numerator();
  } else {
    throw InvalidInput("interval classes exist only for the Kubert families");
  }
  auto roots = numeric::polynomial_roots(ic.cubic, 64);
  if (!roots || roots->size() != 3) throw ContractViolation("interval cubic roots did not converge");
  for (std::size_t i = 0; i < 3; ++i) ic.roots[i] = (*roots)[i].z.re.to_double();
  std::sort(ic.roots.begin(), ic.roots.end());
  if (!(ic.roots[0] < 0 && 0 < ic.roots[1] && ic.roots[1] < 1 && 1 < ic.roots[2])) {
    throw ContractViolation("interval cubic roots are not interlaced with 0 and 1");
  }
  return ic;
}

std::vector<FamilyMember> make_members(FamilyId id, const std::optional<Rational>& parameter) {
  if (is_fixed(id)) {
    auto both = fixed_14();
    if (id == FamilyId::FIXED_49A3) return {both[0]};
    if (id == FamilyId::FIXED_49A4) return {both[1]};
    return both;
  }
  if (!parameter) throw InvalidInput(to_string(id) + " needs a parameter");
  const Rational& u = *parameter;
  switch (id) {
    case FamilyId::F13: return {family_13(u)};
    case FamilyId::F14_KUBERT7: return {family_14_kubert(u)};
    case FamilyId::F18_CYCLIC: return {family_18_cyclic(u)};
    case FamilyId::F18_KUBERT9: return {family_18_kubert9(u)};
    case FamilyId::F2x14: return {family_2x14(u)};
    default: break;
  }
  throw InvalidInput("unknown family");
}

}  // namespace cubictors
