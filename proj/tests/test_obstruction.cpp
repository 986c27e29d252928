#include <doctest.h>

#include "cubictors/errors.hpp"
#include "cubictors/obstruction.hpp"

using namespace cubictors;

namespace {

RationalPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.emplace_back(a);
  return RationalPoly(std::move(v));
}

const std::vector<HyperPoint> kExpected = {{false, Rational(0), Rational(0)}, {false, Rational(1), Rational(0)},
                                           {true, Rational(), Rational()}};

}  // namespace

TEST_CASE("obstruction curves have the expected shape") {
  const HyperCurve c7 = build_obstruction(FamilyId::F14_KUBERT7);
  CHECK(c7.h.degree() == 5);
  CHECK(c7.genus() == 2);
  const HyperCurve c9 = build_obstruction(FamilyId::F18_KUBERT9);
  CHECK(c9.h.degree() == 7);
  CHECK(c9.genus() == 3);
  CHECK_THROWS_AS(build_obstruction(FamilyId::F13), InvalidInput);
}

TEST_CASE("substitution carries -27 k^2 = Delta to the curve") {
  for (FamilyId id : {FamilyId::F14_KUBERT7, FamilyId::F18_KUBERT9}) {
    const ObstructionModel m = obstruction_model(id);
    const RationalPoly lhs = RationalPoly::constant(Rational(-27)) * (m.m * m.m) * m.curve.h;
    CHECK(lhs == RationalPoly::constant(Rational(81)) * m.delta);
  }
}

TEST_CASE("point search up to height 100") {
  CHECK(search_rational_points(build_obstruction(FamilyId::F14_KUBERT7), 100) == kExpected);
  CHECK(search_rational_points(build_obstruction(FamilyId::F18_KUBERT9), 100, 2) == kExpected);
}

TEST_CASE("point search finds planted points") {
  // v^2 = u^5 + 1
  const HyperCurve c{"test", P({1, 0, 0, 0, 0, 1})};
  const auto pts = search_rational_points(c, 10);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == HyperPoint{false, Rational(-1), Rational(0)});
  CHECK(pts[1] == HyperPoint{false, Rational(0), Rational(-1)});
  CHECK(pts[2] == HyperPoint{false, Rational(0), Rational(1)});
  CHECK(pts[3].infinity);
}

TEST_CASE("sigma and phi") {
  const SigmaPhiReport r = verify_sigma_and_phi();
  CHECK(r.sigma_preserves_curve);
  CHECK(r.sigma_not_identity);
  CHECK(r.sigma_cubed_identity);
  CHECK(r.sigma_commutes_with_involution);
  CHECK(r.phi_lands_on_quotient);
  CHECK(r.phi_sigma_invariant);
  CHECK_FALSE(genus3_sigma().is_identity());
}

TEST_CASE("fibers over the quotient") {
  const FiberReport f = fiber_analysis();
  CHECK(f.quotient_torsion == TorsionGroup{1, 6});
  CHECK(f.listed_points_exhaust);
  REQUIRE(f.fibers.size() == 3);
  for (const Fiber& fb : f.fibers) {
    CAPTURE(fb.x0.to_string());
    CHECK(fb.cubic.degree() == 3);
    CHECK(fb.rational_roots.empty());
  }
  CHECK(f.ok());
  CHECK(quotient_listed_points().size() == 6);
}

TEST_CASE("citations are recorded") {
  CHECK_FALSE(completeness_citation(FamilyId::F14_KUBERT7).empty());
  CHECK_FALSE(completeness_citation(FamilyId::F18_KUBERT9).empty());
}
