#include <doctest.h>

#include <random>
#include <set>

#include "cubictors/elliptic.hpp"
#include "cubictors/errors.hpp"

using namespace cubictors;

namespace {

RationalPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.emplace_back(a);
  return RationalPoly(std::move(v));
}

Rational Q(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

const Field& zeta7() {
  static const Field K = CubicField::create(P({-1, -1, 2, 1}));
  return K;
}

EllipticCurve curve(std::initializer_list<long> a) {
  std::array<FieldElement, 5> c;
  std::size_t i = 0;
  for (long v : a) c[i++] = FieldElement(v);
  return EllipticCurve(nullptr, c);
}

EllipticCurve e49a3() { return curve({1, -1, 0, -107, 552}); }
EllipticCurve e49a4() { return curve({1, -1, 0, -1822, 30393}); }
EllipticCurve x3p1() { return EllipticCurve::short_form(nullptr, FieldElement(0), FieldElement(1)); }

FieldElement elt(const Field& K, Rational c0, Rational c1, Rational c2) { return FieldElement(K, {c0, c1, c2}); }

// Tate normal form y^2 + a1 xy + a3 y = x^3 + a3' x^2 with a2 = a3.
EllipticCurve tate(const Field& K, const FieldElement& a1, const FieldElement& b) {
  return EllipticCurve(K, {a1, b, b, FieldElement(), FieldElement()});
}

}  // namespace

TEST_CASE("invariants") {
  CHECK(e49a3().j_invariant() == FieldElement(-3375));
  CHECK(e49a4().j_invariant() == FieldElement(16581375));
  CHECK(x3p1().j_invariant() == FieldElement(0));
  CHECK(x3p1().discriminant() == FieldElement(-432));
  CHECK_THROWS_AS(EllipticCurve::short_form(nullptr, FieldElement(-3), FieldElement(2)), SingularCurve);
}

TEST_CASE("group law on y^2 = x^3 + 1") {
  EllipticCurve E = x3p1();
  CurvePoint p = CurvePoint::affine(FieldElement(2), FieldElement(3));
  CHECK(point_add(E, p, CurvePoint::at_infinity()) == p);
  CHECK(point_mul(E, 2, p) == CurvePoint::affine(FieldElement(0), FieldElement(1)));
  CHECK(point_mul(E, 3, p) == CurvePoint::affine(FieldElement(-1), FieldElement(0)));
  CHECK(point_mul(E, 6, p).infinity);
  CHECK(point_order(E, p) == 6);
  CHECK(point_mul(E, -1, p) == CurvePoint::affine(FieldElement(2), FieldElement(-3)));
  CHECK_THROWS_AS(point_add(E, CurvePoint::affine(FieldElement(1), FieldElement(1)), p), InvalidInput);
}

TEST_CASE("Weierstrass changes compose and invert") {
  EllipticCurve E = e49a3();
  WeierstrassChange a{FieldElement(Q(2)), FieldElement(Q(1, 3)), FieldElement(Q(-1)), FieldElement(Q(5, 2))};
  WeierstrassChange b{FieldElement(Q(-1, 5)), FieldElement(Q(4)), FieldElement(Q(1, 7)), FieldElement(Q(0))};
  CHECK(E.change(a).change(b) == E.change(a.then(b)));
  CHECK(E.change(a).change(a.inverse()) == E);
  CHECK(E.change(a).j_invariant() == E.j_invariant());
  // the rational 2-torsion point of 49A3
  auto tors = torsion_points(E, nullptr);
  REQUIRE(tors.points.size() == 2);
  CurvePoint R = tors.points[1];
  CHECK(E.change(a).contains(transport(a, R)));
  CHECK(point_order(E.change(a), transport(a, R)) == 2);
  auto [S, w] = short_model(E);
  CHECK(S.is_short());
  CHECK(S.a4() == -E.c4() / FieldElement(48));
  CHECK(S.a6() == -E.c6() / FieldElement(864));
}

TEST_CASE("division polynomials") {
  CHECK(division_polynomial(x3p1(), 3) == P({0, 12, 0, 0, 3}));
  CHECK(division_polynomial(x3p1(), 2) == P({1, 0, 0, 1}));
  CHECK(division_polynomial(x3p1(), 1) == P({1}));
  for (int n = 1; n <= 13; ++n) {
    int expected = n % 2 == 1 ? (n * n - 1) / 2 : (n * n - 4) / 2 + 3;
    CHECK(division_polynomial(x3p1(), n).degree() == expected);
  }
  CHECK_THROWS_AS(division_polynomial(e49a3(), 3), InvalidInput);
}

TEST_CASE("division polynomial roots match group-law enumeration") {
  struct Case {
    EllipticCurve S;
    Field K;
    CurvePoint gen;
  };
  std::vector<Case> cases;
  {
    cases.push_back({x3p1(), nullptr, CurvePoint::affine(FieldElement(2), FieldElement(3))});
  }
  {
    auto [S, w] = short_model(e49a3());
    auto pts = torsion_points(S, zeta7()).points;
    REQUIRE(pts.size() == 14);
    cases.push_back({S, zeta7(), pts.back()});
  }
  for (const auto& c : cases) {
    const long order = *point_order(c.S, c.gen);
    std::vector<CurvePoint> group{CurvePoint::at_infinity()};
    for (long k = 1; k < order; ++k) group.push_back(point_add(c.S, group.back(), c.gen));
    for (int n = 1; n <= 9; ++n) {
      RationalPoly psi = division_polynomial(c.S, n);
      std::set<std::array<Rational, 3>> expected;
      for (const auto& Pt : group) {
        if (Pt.infinity) continue;
        if (point_mul(c.S, n, Pt).infinity) expected.insert(Pt.x.in(c.K).coords());
      }
      std::set<std::array<Rational, 3>> found;
      for (const auto& x : roots_in_field(psi, c.K)) {
        FieldElement rhs = (x * x + c.S.a4()) * x + c.S.a6();
        if (rhs.is_zero() || sqrt_in_field(rhs, c.K)) found.insert(x.coords());
      }
      CHECK(found == expected);
    }
  }
}

TEST_CASE("torsion subgroups") {
  auto t = torsion_points(x3p1(), nullptr);
  CHECK(t.group == TorsionGroup{1, 6});
  std::set<std::pair<Rational, Rational>> pts;
  for (const auto& p : t.points)
    if (!p.infinity) pts.insert({p.x.coords()[0], p.y.coords()[0]});
  std::set<std::pair<Rational, Rational>> want{{-1, 0}, {0, 1}, {0, -1}, {2, 3}, {2, -3}};
  CHECK(pts == want);
  CHECK(t.points.front().infinity);

  CHECK(torsion_subgroup(e49a3(), nullptr) == TorsionGroup{1, 2});
  CHECK(torsion_subgroup(e49a4(), nullptr) == TorsionGroup{1, 2});
  CHECK(torsion_subgroup(e49a3(), zeta7()) == TorsionGroup{1, 14});
  CHECK(torsion_subgroup(e49a4(), zeta7()) == TorsionGroup{1, 14});
  for (const auto& E : {e49a3(), e49a4()}) {
    EllipticCurve tw = quadratic_twist(short_model(E).first, FieldElement(-7));
    CHECK(torsion_subgroup(tw, zeta7()) == TorsionGroup{1, 2});
  }
  // y^2 = x^3 - x has full rational 2-torsion
  CHECK(torsion_subgroup(EllipticCurve::short_form(nullptr, FieldElement(-1), FieldElement(0)), nullptr) ==
        TorsionGroup{2, 2});
  CHECK_THROWS_AS(torsion_subgroup(tate(zeta7(), FieldElement::generator(zeta7()), FieldElement(1)), zeta7()),
                  InvalidInput);
}

TEST_CASE("torsion group lists and formatting") {
  CHECK(mazur_groups().size() == 15);
  CHECK(najman_groups().size() == 20);
  CHECK(in_najman_list({1, 13}));
  CHECK_FALSE(in_mazur_list({1, 13}));
  CHECK_FALSE(in_najman_list({1, 11}));
  CHECK(TorsionGroup{2, 14}.to_string() == "Z/2 x Z/14");
  CHECK(TorsionGroup{1, 6}.to_string() == "Z/6");
  CHECK(TorsionGroup::parse("Z/2 x Z/14") == TorsionGroup{2, 14});
  CHECK(TorsionGroup::parse("Z/13") == TorsionGroup{1, 13});
  CHECK_FALSE(TorsionGroup::parse("Z/3 x Z/4").has_value());
  CHECK(divides(TorsionGroup{1, 2}, TorsionGroup{1, 14}));
  CHECK_FALSE(divides(TorsionGroup{1, 4}, TorsionGroup{1, 14}));
}

TEST_CASE("quadratic twists keep j and are isomorphic exactly over square twists") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> coef(-15, 15);
  int done = 0;
  while (done < 100) {
    long A = coef(rng), B = coef(rng), U = coef(rng);
    if (U == 0 || 4 * A * A * A + 27 * B * B == 0) continue;
    ++done;
    EllipticCurve E = EllipticCurve::short_form(nullptr, FieldElement(A), FieldElement(B));
    EllipticCurve T = quadratic_twist(E, FieldElement(U));
    CHECK(T.j_invariant() == E.j_invariant());
    if (done <= 30) {
      bool square = is_square_rational(Rational(U)).has_value();
      CHECK(is_isomorphic_over(E, T, nullptr).has_value() == square);
    }
  }
  EllipticCurve E = EllipticCurve::short_form(nullptr, FieldElement(2), FieldElement(3));
  CHECK(quadratic_twist(E, FieldElement(1)) == E);
  CHECK_THROWS_AS(quadratic_twist(E, FieldElement(0)), InvalidInput);
  // over K, a twist by a square of a field element is trivial, by alpha it is not
  FieldElement a = FieldElement::generator(zeta7());
  FieldElement U = (a + FieldElement(2)) * (a + FieldElement(2));
  CHECK(is_isomorphic_over(E, quadratic_twist(E.over(zeta7()), U), zeta7()).has_value());
  CHECK_FALSE(is_isomorphic_over(E, quadratic_twist(E.over(zeta7()), a), zeta7()).has_value());
  // points transport to the twist
  CurvePoint p = CurvePoint::affine(FieldElement(1), FieldElement(6));
  EllipticCurve E6 = EllipticCurve::short_form(nullptr, FieldElement(2), FieldElement(33));
  REQUIRE(E6.contains(p));
  EllipticCurve T4 = quadratic_twist(E6, FieldElement(4));
  CHECK(T4.contains(twist_point(p, FieldElement(4), FieldElement(8))));
}

TEST_CASE("isomorphisms") {
  CHECK(is_isomorphic_over(e49a3(), e49a3(), nullptr).has_value());
  auto w = is_isomorphic_over(e49a3(), e49a3(), nullptr);
  CHECK(e49a3().change(*w) == e49a3());
  EllipticCurve tw = quadratic_twist(short_model(e49a3()).first, FieldElement(-7));
  CHECK_FALSE(is_isomorphic_over(e49a3(), tw, nullptr).has_value());
  CHECK_FALSE(is_isomorphic_over(e49a3(), e49a4(), zeta7()).has_value());

  const Field& K = zeta7();
  EllipticCurve E1 = tate(K, elt(K, Q(3, 7), Q(2, 7), Q(5, 7)), elt(K, Q(-3, 7), Q(-1, 7), Q(1)));
  EllipticCurve E2 = tate(K, -elt(K, Q(-23, 7), Q(22, 7), Q(13, 7)), -elt(K, Q(1), Q(12, 7), Q(4, 7)));
  CHECK(E1.j_invariant() == FieldElement(-3375));
  CHECK(E2.j_invariant() == FieldElement(16581375));
  auto i1 = is_isomorphic_over(E1, e49a3(), K);
  REQUIRE(i1.has_value());
  CHECK(E1.change(*i1) == e49a3().over(K));
  CHECK(is_isomorphic_over(E2, e49a4(), K).has_value());
  // (0, 0) is the 14-torsion point of the Tate normal form
  CHECK(point_order(E1, CurvePoint::affine(FieldElement(K, Q(0)), FieldElement(K, Q(0)))) == 14);

  // j = 0 and j = 1728 use sextic and quartic twists
  EllipticCurve J0 = EllipticCurve::short_form(nullptr, FieldElement(0), FieldElement(1));
  CHECK(is_isomorphic_over(J0, EllipticCurve::short_form(nullptr, FieldElement(0), FieldElement(64)), nullptr));
  CHECK_FALSE(is_isomorphic_over(J0, EllipticCurve::short_form(nullptr, FieldElement(0), FieldElement(4)), nullptr));
  Field C2 = CubicField::create(P({-2, 0, 0, 1}));
  CHECK(is_isomorphic_over(J0, EllipticCurve::short_form(nullptr, FieldElement(0), FieldElement(4)), C2));
  EllipticCurve J1728 = EllipticCurve::short_form(nullptr, FieldElement(1), FieldElement(0));
  CHECK(is_isomorphic_over(J1728, EllipticCurve::short_form(nullptr, FieldElement(16), FieldElement(0)), nullptr));
  CHECK_FALSE(is_isomorphic_over(J1728, EllipticCurve::short_form(nullptr, FieldElement(4), FieldElement(0)), nullptr));
}

TEST_CASE("bn_normalize on 49A3 over Q(zeta7)+") {
  const Field& K = zeta7();
  auto data = torsion_points(e49a3(), K);
  std::optional<CurvePoint> seven;
  for (const auto& p : data.points)
    if (point_order(e49a3().over(K), p) == 7) seven = p;
  REQUIRE(seven.has_value());
  EllipticCurve EK = e49a3().over(K);
  Normalization n = bn_normalize(EK, *seven);
  CHECK(n.curve.j_invariant() == FieldElement(-3375));
  CHECK(n.curve.a1() == FieldElement(1));
  CHECK(n.curve.a3() == FieldElement(0));
  CurvePoint moved = transport(n.change, *seven);
  Normalization again = bn_normalize(n.curve.over(K), moved);
  CHECK(again.curve == n.curve);
  CHECK_THROWS_AS(bn_normalize(x3p1(), CurvePoint::affine(FieldElement(2), FieldElement(3))), InvalidInput);
}
