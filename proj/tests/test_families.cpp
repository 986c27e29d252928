#include <doctest.h>

#include <random>

#include "cubictors/errors.hpp"
#include "cubictors/families.hpp"

using namespace cubictors;

namespace {

Rational Q(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }
Rational R(const char* s) { return Rational::parse(s); }

Rational short_A(const EllipticCurve& E) { return *short_model(E).first.a4().as_rational(); }
Rational short_B(const EllipticCurve& E) { return *short_model(E).first.a6().as_rational(); }

}  // namespace

TEST_CASE("every table entry parses and evaluates away from poles") {
  const auto names = coefficient_names();
  CHECK(names.size() > 50);
  for (const auto& n : names) {
    CAPTURE(n);
    CHECK_NOTHROW(coefficient(n));
  }
  CHECK_THROWS_AS(coefficient("NOPE.x"), InvalidInput);
}

// Reference values computed independently with a computer algebra system.
TEST_CASE("Z/13 coefficients at u = 2 and u = -1/3") {
  CHECK(coefficient_at("F13.A", Q(2)) == R("459/31"));
  CHECK(coefficient_at("F13.B", Q(2)) == R("351270/961"));
  CHECK(coefficient_at("F13.a3", Q(2)) == Q(3936256));
  CHECK(coefficient_at("F13.a2", Q(2)) == Q(-2214144));
  CHECK(coefficient_at("F13.a1", Q(2)) == Q(-2156112));
  CHECK(coefficient_at("F13.a0", Q(2)) == Q(-290331));
  CHECK(coefficient_at("F13.A", Q(-1, 3)) == R("272/309"));
  CHECK(coefficient_at("F13.B", Q(-1, 3)) == R("-52240/286443"));
  CHECK(coefficient_at("F13.a3", Q(-1, 3)) == R("10609/3486784401"));
  CHECK(coefficient_at("F13.a0", Q(-1, 3)) == R("-4061248/177147"));
}

// The printed A, B are the short model rescaled by x -> 4x, y -> 8y.
TEST_CASE("Kubert short models agree with the printed A and B") {
  CHECK(coefficient_at("K7.fA", Q(2)) == Q(-43));
  CHECK(coefficient_at("K7.fB", Q(2)) == Q(166));
  for (const Rational u : {Q(2), Q(3), Q(-1), Q(1, 3), Q(7, 5)}) {
    CAPTURE(u);
    const EllipticCurve E7 = kubert7_curve(u);
    CHECK(Q(16) * short_A(E7) == coefficient_at("K7.fA", u));
    CHECK(Q(64) * short_B(E7) == coefficient_at("K7.fB", u));
    CHECK(E7.discriminant() == FieldElement(kubert7_discriminant(u)));
    const EllipticCurve E9 = kubert9_curve(u);
    CHECK(Q(16) * short_A(E9) == coefficient_at("K9.fA", u));
    CHECK(Q(64) * short_B(E9) == coefficient_at("K9.fB", u));
    CHECK(E9.discriminant() == FieldElement(kubert9_discriminant(u)));
  }
}

TEST_CASE("a pole of a coefficient is an exclusion") {
  CHECK_THROWS_AS(coefficient_at("S3.s", Q(1)), Excluded);
  CHECK(coefficient_at("F2x14.A2", Q(1)).is_zero());
  CHECK_THROWS_AS(family_14_kubert(Q(1)), Excluded);
  CHECK_THROWS_AS(family_14_kubert(Q(0)), Excluded);
  CHECK_THROWS_AS(family_18_cyclic(Q(3)), Excluded);
  CHECK_THROWS_AS(family_2x14(Q(1)), Excluded);
}

TEST_CASE("members carry the expected groups and field types") {
  const FamilyMember m13 = family_13(Q(2));
  CHECK(m13.expected_torsion == TorsionGroup{1, 13});
  CHECK(m13.expected_class.galois_type == GaloisType::Cyclic);
  CHECK(classify(*m13.field).galois_type == GaloisType::Cyclic);

  const FamilyMember m18 = family_18_cyclic(Q(2));
  CHECK(m18.expected_torsion == TorsionGroup{1, 18});
  REQUIRE(m18.expected_rational_torsion);
  CHECK(*m18.expected_rational_torsion == TorsionGroup{1, 6});

  const FamilyMember m214 = family_2x14(Q(2));
  CHECK(m214.expected_torsion == TorsionGroup{2, 14});
  CHECK(classify(*m214.field).galois_type == GaloisType::Cyclic);

  const auto pair = make_members(FamilyId::F14_ISOG, std::nullopt);
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].curve == curve_49a3());
  CHECK(pair[1].curve == curve_49a4());
  CHECK(same_field(pair[0].field, zeta7_plus_field()));
}

TEST_CASE("family labels round-trip") {
  for (FamilyId id : all_families()) CHECK(parse_family(to_string(id)) == id);
  CHECK_FALSE(parse_family("F99"));
  CHECK(is_fixed(FamilyId::FIXED_49A3));
  CHECK(is_fixed(FamilyId::F14_ISOG));
  CHECK_FALSE(is_fixed(FamilyId::F13));
}

TEST_CASE("interval rule matches the sign of the discriminant") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 17);
  for (FamilyId id : {FamilyId::F14_KUBERT7, FamilyId::F18_KUBERT9}) {
    const IntervalClass ic = interval_class(id);
    CHECK(ic.roots[0] < 0);
    CHECK(ic.roots[1] > 0);
    CHECK(ic.roots[1] < 1);
    CHECK(ic.roots[2] > 1);
    int checked = 0;
    while (checked < 20) {
      const Rational u{Integer(num(rng)), Integer(den(rng))};
      if (u.is_zero() || u == Q(1) || ic.cubic(u).is_zero()) continue;
      const Rational d = id == FamilyId::F14_KUBERT7 ? kubert7_discriminant(u) : kubert9_discriminant(u);
      CAPTURE(u);
      CHECK((ic.locate(u) == Interval::I) == (d.sign() < 0));
      ++checked;
    }
    CHECK_THROWS_AS(ic.locate(Q(0)), Excluded);
    CHECK_THROWS_AS(ic.locate(Q(1)), Excluded);
  }
}

TEST_CASE("Z/13 twist identity") {
  for (const Rational t : {Q(2), Q(3), Q(-1), Q(1, 2), Q(5, 3)}) {
    CAPTURE(t);
    const Twist13Check c = check_twist13_identity(t);
    CHECK(c.beta_squared);
    CHECK(c.twist);
  }
}

TEST_CASE("Z/14 modular map sends X1(14) to X0(14)") {
  // (x, y) = (-1, 1) lies on y^2 + (x^2 + x) y + x = 0.
  const FieldElement x(-1), y(1);
  CHECK(Modular14::x1_equation(x, y).is_zero());
  const auto [u, v] = eval_phi(x, y);
  CHECK(Modular14::x0_equation(u, v).is_zero());
  CHECK_THROWS_AS(eval_phi(FieldElement(0), FieldElement(0)), InvalidInput);
}

TEST_CASE("9-isogeny details") {
  const RationalPoly lin = three_torsion_linear_factor(Q(1));
  CHECK(lin(Q(-648)).is_zero());
  for (const Rational s : {Q(0), Q(1), Q(-2), Q(1, 2), Q(-4, 3)}) {
    CAPTURE(s);
    CHECK(discriminant(cubic_factor_F(s)) == cubic_factor_F_disc_formula(s));
  }
  CHECK(cubic_factor_F_disc_formula(Q(0)) == Q(2985984));
  CHECK(s_of_u(Q(2)) == Q(-4, 3));
}

TEST_CASE("Z/2 x Z/14 long and short models are isomorphic over Q") {
  for (const Rational u : {Q(2), Q(-2), Q(1, 2)}) {
    CAPTURE(u);
    const EllipticCurve L = family_2x14_long(u), S = family_2x14_short(u);
    CHECK(L.j_invariant() == S.j_invariant());
    CHECK(is_isomorphic_over(L, S, nullptr).has_value());
  }
}

TEST_CASE("printed point has order 7 on E_t") {
  const Printed2x14 p = family_2x14_printed(Q(2));
  CHECK(p.curve.contains(p.point));
  CHECK(point_order(p.curve, p.point) == 7);
}
