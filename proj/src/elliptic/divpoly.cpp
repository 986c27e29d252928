#include "cubictors/elliptic.hpp"
#include "cubictors/errors.hpp"

namespace cubictors {

namespace {

// g_n = psi_n for odd n and psi_n / (2y) for even n, as polynomials in x.
std::vector<RationalPoly> reduced_division_polynomials(const Rational& A, const Rational& B, int n) {
  std::vector<RationalPoly> g(static_cast<std::size_t>(std::max(n, 4)) + 1);
  g[1] = RationalPoly::constant(1);
  g[2] = RationalPoly::constant(1);
  g[3] = RationalPoly({-A * A, Rational(12) * B, Rational(6) * A, Rational(0), Rational(3)});
  g[4] = RationalPoly({-Rational(8) * B * B - A * A * A, -Rational(4) * A * B, -Rational(5) * A * A,
                       Rational(20) * B, Rational(5) * A, Rational(0), Rational(1)}) *
         Rational(2);
  const RationalPoly F = RationalPoly({B, A, Rational(0), Rational(1)}) * Rational(4);
  const RationalPoly F2 = F * F;
  for (int k = 5; k <= n; ++k) {
    const int m = k / 2;
    const auto& gm = g[static_cast<std::size_t>(m)];
    const auto& gp1 = g[static_cast<std::size_t>(m + 1)];
    const auto& gp2 = g[static_cast<std::size_t>(m + 2)];
    const auto& gm1 = g[static_cast<std::size_t>(m - 1)];
    if (k % 2 == 1) {
      RationalPoly lhs = gp2 * gm.pow(3);
      RationalPoly rhs = gm1 * gp1.pow(3);
      g[static_cast<std::size_t>(k)] = (m % 2 == 0) ? F2 * lhs - rhs : lhs - F2 * rhs;
    } else {
      const auto& gm2 = g[static_cast<std::size_t>(m - 2)];
      g[static_cast<std::size_t>(k)] = gm * (gp2 * gm1 * gm1 - gm2 * gp1 * gp1);
    }
  }
  return g;
}

}  // namespace

RationalPoly division_polynomial(const EllipticCurve& E, int n) {
  if (n < 1) throw InvalidInput("division polynomial index must be positive");
  if (!E.is_short() || !E.has_rational_coefficients()) {
    throw InvalidInput("division polynomials need a short model with rational coefficients");
  }
  const Rational A = E.a4().coords()[0];
  const Rational B = E.a6().coords()[0];
  if (n <= 2) return n == 1 ? RationalPoly::constant(1) : RationalPoly({B, A, Rational(0), Rational(1)});
  auto g = reduced_division_polynomials(A, B, n);
  RationalPoly out = g[static_cast<std::size_t>(n)];
  if (n % 2 == 0) out = out * RationalPoly({B, A, Rational(0), Rational(1)});
  return out;
}

}  // namespace cubictors
