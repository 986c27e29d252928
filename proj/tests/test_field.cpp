#include <doctest.h>

#include <random>

#include "cubictors/errors.hpp"
#include "cubictors/field.hpp"

using namespace cubictors;

namespace {

RationalPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.emplace_back(a);
  return RationalPoly(std::move(v));
}

const Field& zeta7() {
  static const Field K = CubicField::create(P({-1, -1, 2, 1}));
  return K;
}

const Field& cbrt2() {
  static const Field K = CubicField::create(P({-2, 0, 0, 1}));
  return K;
}

}  // namespace

TEST_CASE("field construction rejects reducible or wrong-degree input") {
  CHECK_THROWS_AS(CubicField::create(P({-2, -3, 0, 1})), InvalidInput);
  CHECK_THROWS_AS(CubicField::create(P({1, 0, 1})), InvalidInput);
  Field K = CubicField::create(RationalPoly({Rational(4), Rational(-27), Rational(-4), Rational(3)}));
  CHECK(K->scale() == 3);
  CHECK(K->integral_model().leading() == Rational(1));
  for (const auto& c : K->integral_model().coefficients()) CHECK(c.is_integer());
}

TEST_CASE("classify") {
  CHECK(classify(*zeta7()) == FieldClass{GaloisType::Cyclic, false});
  CHECK(classify(*cbrt2()) == FieldClass{GaloisType::Complex, true});
  CHECK(classify(*CubicField::create(P({-1, -4, 0, 1}))) == FieldClass{GaloisType::TotallyRealNonGalois, false});
  CHECK(zeta7()->disc() == Rational(49));
  CHECK(to_string(GaloisType::TotallyRealNonGalois) == "TOTALLY_REAL_NON_GALOIS");
}

TEST_CASE("classify is invariant under integral rescaling of the generator") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coef(-20, 20);
  int tested = 0;
  while (tested < 40) {
    RationalPoly f({Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng)), Rational(1)});
    if (!distinct_rational_roots(f).empty()) continue;
    ++tested;
    for (long c : {2L, 3L, 7L}) {
      // c^3 f(x / c)
      RationalPoly g = f.scale_variable(Rational(1) / Rational(c)) * Rational(c * c * c);
      CHECK(classify(*CubicField::create(f)).galois_type == classify(*CubicField::create(g)).galois_type);
      CHECK(classify(*CubicField::create(f)).pure_candidate == classify(*CubicField::create(g)).pure_candidate);
    }
  }
}

TEST_CASE("element arithmetic and inverse") {
  FieldElement a = FieldElement::generator(cbrt2());
  FieldElement inv = element_inverse(a);
  CHECK(inv == FieldElement(cbrt2(), {Rational(0), Rational(0), Rational(1) / Rational(2)}));
  CHECK(element_inverse(FieldElement(zeta7(), Rational(1))) == FieldElement(zeta7(), Rational(1)));
  FieldElement b = FieldElement(zeta7(), Rational(1)) + FieldElement::generator(zeta7());
  CHECK(b * element_inverse(b) == FieldElement(zeta7(), Rational(1)));
  CHECK_THROWS_AS(element_inverse(FieldElement(zeta7(), Rational(0))), DivisionByZero);
  CHECK(a.pow(3) == FieldElement(2));
  CHECK(FieldElement(3) * a == a + a + a);
  CHECK_THROWS_AS(a + FieldElement::generator(zeta7()), InvalidInput);
  CHECK(norm(a) == Rational(2));
  CHECK(trace(FieldElement::generator(zeta7())) == Rational(-2));
  CHECK(charpoly(FieldElement::generator(zeta7())) == P({-1, -1, 2, 1}));

  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int i = 0; i < 200; ++i) {
    FieldElement x(zeta7(), {Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))});
    if (x.is_zero()) continue;
    CHECK(x * element_inverse(x) == FieldElement(1));
  }
}

TEST_CASE("embeddings") {
  auto e = embeddings(*zeta7(), 128);
  REQUIRE(e.size() == 3);
  CHECK(e[0].re.to_double() == doctest::Approx(-2.2469796037));
  CHECK(e[1].re.to_double() == doctest::Approx(-0.5549581321));
  CHECK(e[2].re.to_double() == doctest::Approx(0.8019377358));
  auto c = embeddings(*cbrt2(), 128);
  CHECK(c[0].re.to_double() == doctest::Approx(1.2599210499));
  CHECK(c[0].im.is_zero());
  CHECK(c[1].im.to_double() < 0);
  CHECK(c[2].im.to_double() > 0);
  CHECK(c[1].re.to_double() == doctest::Approx(c[2].re.to_double()));
}

TEST_CASE("roots_in_field") {
  auto r = roots_in_field(zeta7()->minpoly(), zeta7());
  CHECK(r.size() == 3);
  for (const auto& x : r) CHECK(evaluate(zeta7()->minpoly(), x).is_zero());
  CHECK(roots_in_field(P({1, 1, 1}), CubicField::create(P({-1, -4, 0, 1}))).empty());
  auto s = roots_in_field(P({-2, 0, 0, 1}), cbrt2());
  REQUIRE(s.size() == 1);
  CHECK(s[0] == FieldElement::generator(cbrt2()));
  auto q = roots_in_field(P({-6, 11, -6, 1}), cbrt2());
  CHECK(q.size() == 3);
  CHECK(roots_in_field(P({-6, 11, -6, 1}), nullptr).size() == 3);
}

TEST_CASE("roots_in_field with a non-monic, non-integral defining polynomial") {
  // 3x^3 - 4x^2 - 27x + 4 is the F2x14 field at u = 2
  Field K = CubicField::create(P({4, -27, -4, 3}));
  CHECK(classify(*K).galois_type == GaloisType::Cyclic);
  auto r = roots_in_field(K->minpoly(), K);
  CHECK(r.size() == 3);
  // a root of a rescaled polynomial: 2 alpha / 5 satisfies minpoly(5x/2) = 0
  RationalPoly h = K->minpoly().scale_variable(Rational(5) / Rational(2));
  auto hr = roots_in_field(h, K);
  CHECK(hr.size() == 3);
  for (const auto& x : hr) CHECK(evaluate(h, x).is_zero());
}

TEST_CASE("sqrt_in_field") {
  FieldElement one(zeta7(), Rational(1));
  FieldElement a = FieldElement::generator(zeta7());
  auto s = sqrt_in_field((one + a) * (one + a), zeta7());
  REQUIRE(s.has_value());
  CHECK((*s == one + a || *s == -(one + a)));
  CHECK(embedding_sign(*s) > 0);
  CHECK_FALSE(sqrt_in_field(FieldElement(2), zeta7()).has_value());
  CHECK_FALSE(sqrt_in_field(FieldElement(2), cbrt2()).has_value());
  CHECK_FALSE(sqrt_in_field(a, zeta7()).has_value());
  CHECK(sqrt_in_field(FieldElement(9) / FieldElement(4), zeta7()) == FieldElement(3) / FieldElement(2));
  auto cube = nth_roots_in_field(FieldElement(2), 3, cbrt2());
  REQUIRE(cube.size() == 1);
  CHECK(cube[0] == FieldElement::generator(cbrt2()));
  auto sixth = nth_roots_in_field(FieldElement(4), 6, cbrt2());
  CHECK(sixth.size() == 2);
}

TEST_CASE("sqrt_in_field of squares on random elements") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-30, 30);
  std::uniform_int_distribution<long> den(1, 7);
  const Field fields[] = {zeta7(), cbrt2(), CubicField::create(P({-1, -4, 0, 1}))};
  for (int i = 0; i < 200; ++i) {
    const Field& K = fields[i % 3];
    FieldElement c(K, {Rational(Integer(coef(rng)), Integer(den(rng))), Rational(coef(rng)),
                       Rational(Integer(coef(rng)), Integer(den(rng)))});
    auto s = sqrt_in_field(c * c, K);
    REQUIRE(s.has_value());
    CHECK((*s == c || *s == -c));
  }
}
