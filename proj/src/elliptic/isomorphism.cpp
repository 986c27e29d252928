#include "cubictors/elliptic.hpp"
#include "cubictors/errors.hpp"

namespace cubictors {

std::optional<WeierstrassChange> is_isomorphic_over(const EllipticCurve& E1, const EllipticCurve& E2, const Field& K,
                                                    const RootOptions& opts) {
  const EllipticCurve F1 = E1.over(K);
  const EllipticCurve F2 = E2.over(K);
  if (!(F1.j_invariant() == F2.j_invariant())) return std::nullopt;
  auto [S1, w1] = short_model(F1);
  auto [S2, w2] = short_model(F2);
  const FieldElement &A1 = S1.a4(), &B1 = S1.a6(), &A2 = S2.a4(), &B2 = S2.a6();

  // S1.change(u) has a4 / u^4, a6 / u^6.
  FieldElement ratio;
  int n = 2;
  if (A1.is_zero()) {
    ratio = B1 / B2;
    n = 6;
  } else if (B1.is_zero()) {
    ratio = A1 / A2;
    n = 4;
  } else {
    ratio = B1 * A2 / (B2 * A1);
  }
  FieldElement u;
  if (n == 2) {
    auto r = sqrt_in_field(ratio, K, opts);
    if (!r) return std::nullopt;
    u = *r;
  } else {
    auto roots = nth_roots_in_field(ratio, n, K, opts);
    if (roots.empty()) return std::nullopt;
    u = roots.front();
  }
  WeierstrassChange scale;
  scale.u = u;
  WeierstrassChange w = w1.then(scale).then(w2.inverse());
  if (!(F1.change(w) == F2)) throw ContractViolation("isomorphism witness does not map the curves");
  return w;
}

namespace {

struct Line {
  FieldElement m;
  FieldElement c;
};

Line line_through(const CurvePoint& P, const CurvePoint& Q, const CurvePoint& R) {
  if (P.infinity || Q.infinity || R.infinity || P.x == Q.x) {
    throw InvalidInput("collinear multiples of P are not on a finite non-vertical line");
  }
  Line L;
  L.m = (Q.y - P.y) / (Q.x - P.x);
  L.c = P.y - L.m * P.x;
  if (!(R.y == L.m * R.x + L.c)) throw ContractViolation("multiples of P expected to be collinear are not");
  return L;
}

}  // namespace

Normalization bn_normalize(const EllipticCurve& E, const CurvePoint& P) {
  auto ord = point_order(E, P, 7);
  if (!ord || *ord != 7) throw InvalidInput("bn_normalize needs a point of order 7");
  std::vector<CurvePoint> mult{CurvePoint::at_infinity(), P};
  for (int k = 2; k <= 6; ++k) mult.push_back(point_add(E, mult.back(), P));
  const Line L1 = line_through(mult[1], mult[2], mult[4]);
  const Line L2 = line_through(mult[3], mult[5], mult[6]);
  if (L1.m == L2.m) throw ContractViolation("normalizing lines are parallel");
  const FieldElement x0 = (L2.c - L1.c) / (L1.m - L2.m);
  // x' = p^2 x + r, y' = p^3 y + p^2 q x + s sends L1 to y' = 0 and L2 to y' = -x'.
  const FieldElement p = (L1.m - L2.m).inverse();
  const FieldElement q = -p * L1.m;
  const FieldElement r = -p * p * x0;
  const FieldElement s = -p * p * p * L1.c;
  WeierstrassChange w;
  w.u = p.inverse();
  w.r = x0;
  w.s = -q / p;
  w.t = (q * r - s) / (p * p * p);
  EllipticCurve N = E.change(w);
  if (!N.has_rational_coefficients()) {
    throw ContractViolation("normalized model " + N.to_string() + " is not defined over Q");
  }
  return {N.over(nullptr), w};
}

}  // namespace cubictors
