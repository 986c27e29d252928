#include <doctest.h>

#include <random>

#include "cubictors/errors.hpp"
#include "cubictors/numeric.hpp"
#include "cubictors/poly.hpp"

using namespace cubictors;

namespace {

RationalPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.emplace_back(a);
  return RationalPoly(std::move(v));
}

// Sylvester determinant by fraction-field Gaussian elimination.
Rational sylvester_resultant(const RationalPoly& f, const RationalPoly& g) {
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[i][i + k] = f[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) a[n + i][i + k] = g[n - k];
  Rational det(1);
  for (int c = 0; c < size; ++c) {
    int piv = -1;
    for (int r = c; r < size; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < size; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f2 = a[r][c] / a[c][c];
      for (int k = c; k < size; ++k) a[r][k] -= f2 * a[c][k];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
  Rational q(Integer(6), Integer(-4));
  CHECK(q.to_string() == "-3/2");
  CHECK(q.denominator() == 2);
  CHECK(Rational::parse(" -10/4 ") == Rational(-5) / Rational(2));
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational().to_string() == "0");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), InvalidInput);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("is_square_rational") {
  CHECK(is_square_rational(Rational(49)) == Rational(7));
  CHECK(is_square_rational(Rational(0)) == Rational(0));
  CHECK(is_square_rational(Rational(-108) / Rational(-27)) == Rational(2));
  CHECK(is_square_rational(Rational(9) / Rational(4)) == Rational(3) / Rational(2));
  CHECK_FALSE(is_square_rational(Rational(2)).has_value());
  CHECK_FALSE(is_square_rational(Rational(-4)).has_value());
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P({-2, 0, 0, 1}), P({0, 0, 3})) == Rational(108));
  CHECK(resultant(P({5, -3, 0, 7}), P({1})) == Rational(1));
  CHECK(resultant(P({-1, 0, 1}), P({-1, 1})) == Rational(0));
  CHECK_THROWS_AS(resultant(RationalPoly(), RationalPoly()), InvalidInput);
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(P({-2, 0, 0, 1})) == Rational(-108));
  CHECK(discriminant(P({-1, -1, 2, 1})) == Rational(49));
  CHECK(discriminant(P({-323, 219, -33, 1})) == Rational(2985984));
  CHECK(discriminant(P({-1, -4, 0, 1})) == Rational(229));
  CHECK(discriminant(P({-2, -3, 0, 1})) == Rational(0));
  CHECK_THROWS_AS(discriminant(P({1, 1})), InvalidInput);
}

TEST_CASE("resultant against Sylvester determinant on random cubics") {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    RationalPoly f({Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng)), Rational(1)});
    std::vector<Rational> gc;
    int dg = deg(rng);
    for (int k = 0; k < dg; ++k) gc.emplace_back(coef(rng));
    gc.emplace_back(coef(rng) == 0 ? 1 : coef(rng));
    RationalPoly g(gc);
    if (g.degree() < 1) continue;
    Rational r = resultant(f, g);
    CHECK(r == sylvester_resultant(f, g));
    Rational sign((f.degree() * g.degree()) % 2 == 0 ? 1 : -1);
    CHECK(r == sign * resultant(g, f));
    bool coprime = gcd(f, g).degree() == 0;
    CHECK(r.is_zero() == !coprime);
    CHECK(discriminant(f).is_zero() == !is_squarefree(f));
  }
}

TEST_CASE("rational resultant with non-integral coefficients") {
  RationalPoly f({Rational(1) / Rational(2), Rational(0), Rational(3) / Rational(4)});
  RationalPoly g({Rational(-2) / Rational(3), Rational(5)});
  CHECK(resultant(f, g) == sylvester_resultant(f, g));
}

TEST_CASE("polynomial division and gcd") {
  RationalPoly f = P({-1, 0, 0, 1});
  RationalPoly g = P({-1, 1});
  CHECK(exact_quotient(f, g) == P({1, 1, 1}));
  CHECK_THROWS_AS(exact_quotient(f, P({1, 0, 1})), InvalidInput);
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  auto eg = extended_gcd(P({1, 1}), P({-1, -1, 2, 1}));
  CHECK(eg.g == P({1}));
  CHECK(eg.s * P({1, 1}) + eg.t * P({-1, -1, 2, 1}) == P({1}));
  CHECK(squarefree_part(P({2, 3, 0, -1})) == P({-2, -1, 1}));
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(P({1, 3, -6, 1})).empty());
  CHECK(rational_roots(P({-2, -3, 0, 1})) == std::vector<Rational>{-1, -1, 2});
  CHECK(rational_roots(P({1, 1, 1})).empty());
  CHECK(rational_roots(P({0, 0, 1})) == std::vector<Rational>{0, 0});
  CHECK(rational_roots(P({-3, 2})) == std::vector<Rational>{Rational(3) / Rational(2)});
  CHECK(rational_roots(P({5})).empty());
  CHECK_THROWS_AS(rational_roots(RationalPoly()), InvalidInput);
  CHECK(is_irreducible_low_degree(P({-1, -1, 2, 1})));
  CHECK_FALSE(is_irreducible_low_degree(P({-2, -3, 0, 1})));
}

TEST_CASE("rational roots with large coefficients use numeric candidates") {
  // (x - p1/q1)(x + p2/q2)(x^2 + 1) with large primes
  Integer p1("1000000000000000003"), q1("998244353"), p2("1000000007"), q2("1000000000000000009");
  RationalPoly f = RationalPoly({-Rational(p1, q1), Rational(1)}) * RationalPoly({Rational(p2, q2), Rational(1)}) *
                   P({1, 0, 1}) * RationalPoly({-Rational(p1, q1), Rational(1)});
  std::vector<Rational> want{-Rational(p2, q2), Rational(p1, q1), Rational(p1, q1)};
  CHECK(rational_roots(f) == want);
}

TEST_CASE("rational_roots returns r iff f(r) = 0 on random products") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> small(-12, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> chosen;
    RationalPoly f = P({1});
    for (int k = 0; k < 3; ++k) {
      long d = small(rng);
      Rational r(Integer(small(rng)), Integer(d == 0 ? 1 : d));
      chosen.push_back(r);
      f = f * RationalPoly({-r, Rational(1)});
    }
    f = f * P({small(rng) == 0 ? 3 : 2, 1, 0, 1});
    auto roots = rational_roots(f);
    for (const auto& r : roots) CHECK(f(r).is_zero());
    for (const auto& r : chosen) CHECK(std::count(roots.begin(), roots.end(), r) >= 1);
  }
}

TEST_CASE("numeric roots and rational reconstruction") {
  using namespace numeric;
  auto roots = polynomial_roots(P({-1, -1, 2, 1}), 128);
  REQUIRE(roots.has_value());
  std::vector<double> re;
  for (const auto& r : *roots) {
    CHECK(std::abs(r.z.im.to_double()) < 1e-30);
    CHECK(r.radius.to_double() < 1e-30);
    re.push_back(r.z.re.to_double());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-2.2469796037));
  CHECK(re[1] == doctest::Approx(-0.5549581321));
  CHECK(re[2] == doctest::Approx(0.8019377358));

  PrecisionScope scope(128);
  BigFloat x(Rational(355) / Rational(113));
  auto q = reconstruct_rational(x, pow2(-100), Integer(1000));
  REQUIRE(q.has_value());
  CHECK(*q == Rational(355) / Rational(113));
  CHECK_FALSE(reconstruct_rational(x, pow2(-100), Integer(100)).has_value());
  auto neg = reconstruct_rational(BigFloat(Rational(-7) / Rational(3)), pow2(-90), Integer(10));
  REQUIRE(neg.has_value());
  CHECK(*neg == Rational(-7) / Rational(3));
}
