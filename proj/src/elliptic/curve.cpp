#include <sstream>

#include "cubictors/elliptic.hpp"
#include "cubictors/errors.hpp"

namespace cubictors {

WeierstrassChange WeierstrassChange::then(const WeierstrassChange& n) const {
  FieldElement u2 = u * u;
  return {u * n.u, r + u2 * n.r, s + u * n.s, t + u2 * s * n.r + u2 * u * n.t};
}

WeierstrassChange WeierstrassChange::inverse() const {
  FieldElement ui = u.inverse();
  FieldElement ui2 = ui * ui;
  return {ui, -r * ui2, -s * ui, (r * s - t) * ui2 * ui};
}

std::string CurvePoint::to_string() const {
  if (infinity) return "O";
  return "(" + x.to_string() + ", " + y.to_string() + ")";
}

EllipticCurve::EllipticCurve(Field K, std::array<FieldElement, 5> a) : K_(std::move(K)) {
  for (std::size_t i = 0; i < 5; ++i) a_[i] = a[i].in(K_);
  FieldElement b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
  disc_ = -b2v * b2v * b8v - FieldElement(8) * b4v * b4v * b4v - FieldElement(27) * b6v * b6v +
          FieldElement(9) * b2v * b4v * b6v;
  if (disc_.is_zero()) throw SingularCurve("singular Weierstrass equation " + to_string());
}

EllipticCurve EllipticCurve::short_form(Field K, const FieldElement& A, const FieldElement& B) {
  return EllipticCurve(std::move(K), {FieldElement(), FieldElement(), FieldElement(), A, B});
}

FieldElement EllipticCurve::b2() const { return a1() * a1() + FieldElement(4) * a2(); }
FieldElement EllipticCurve::b4() const { return FieldElement(2) * a4() + a1() * a3(); }
FieldElement EllipticCurve::b6() const { return a3() * a3() + FieldElement(4) * a6(); }
FieldElement EllipticCurve::b8() const {
  return a1() * a1() * a6() + FieldElement(4) * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() - a4() * a4();
}
FieldElement EllipticCurve::c4() const { return b2() * b2() - FieldElement(24) * b4(); }
FieldElement EllipticCurve::c6() const {
  FieldElement b2v = b2();
  return -b2v * b2v * b2v + FieldElement(36) * b2v * b4() - FieldElement(216) * b6();
}
FieldElement EllipticCurve::j_invariant() const {
  FieldElement c = c4();
  return c * c * c / disc_;
}

bool EllipticCurve::has_rational_coefficients() const {
  for (const auto& c : a_)
    if (!c.is_rational()) return false;
  return true;
}

EllipticCurve EllipticCurve::over(const Field& K) const {
  std::array<FieldElement, 5> b;
  for (std::size_t i = 0; i < 5; ++i) {
    if (!K && !a_[i].is_rational()) throw InvalidInput("curve is not defined over Q");
    b[i] = K ? a_[i].in(K) : FieldElement(a_[i].coords()[0]);
  }
  return EllipticCurve(K, b);
}

bool EllipticCurve::contains(const CurvePoint& P) const {
  if (P.infinity) return true;
  const FieldElement& x = P.x;
  const FieldElement& y = P.y;
  return (y * y + a1() * x * y + a3() * y) == (((x + a2()) * x + a4()) * x + a6());
}

EllipticCurve EllipticCurve::change(const WeierstrassChange& w) const {
  const FieldElement &u = w.u, &r = w.r, &s = w.s, &t = w.t;
  FieldElement ui = u.inverse();
  FieldElement ui2 = ui * ui;
  FieldElement ui3 = ui2 * ui;
  FieldElement two(2), three(3);
  std::array<FieldElement, 5> b{
      (a1() + two * s) * ui,
      (a2() - s * a1() + three * r - s * s) * ui2,
      (a3() + r * a1() + two * t) * ui3,
      (a4() - s * a3() + two * r * a2() - (t + r * s) * a1() + three * r * r - two * s * t) * ui2 * ui2,
      (a6() + r * a4() + r * r * a2() + r * r * r - t * a3() - t * t - r * t * a1()) * ui3 * ui3,
  };
  return EllipticCurve(K_, b);
}

std::string EllipticCurve::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < 5; ++i) os << (i ? ", " : "") << a_[i].to_string();
  os << "]";
  return os.str();
}

CurvePoint transport(const WeierstrassChange& w, const CurvePoint& P) {
  if (P.infinity) return P;
  FieldElement ui = w.u.inverse();
  FieldElement ui2 = ui * ui;
  FieldElement dx = P.x - w.r;
  return CurvePoint::affine(dx * ui2, (P.y - w.s * dx - w.t) * ui2 * ui);
}

namespace {

CurvePoint add_unchecked(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  FieldElement lambda, nu;
  if (P.x == Q.x) {
    FieldElement den = P.y + Q.y + E.a1() * Q.x + E.a3();
    if (den.is_zero()) return CurvePoint::at_infinity();
    // P == Q here
    FieldElement d = FieldElement(2) * P.y + E.a1() * P.x + E.a3();
    FieldElement x2 = P.x * P.x;
    lambda = (FieldElement(3) * x2 + FieldElement(2) * E.a2() * P.x + E.a4() - E.a1() * P.y) / d;
    nu = (-x2 * P.x + E.a4() * P.x + FieldElement(2) * E.a6() - E.a3() * P.y) / d;
  } else {
    FieldElement dx = (Q.x - P.x).inverse();
    lambda = (Q.y - P.y) * dx;
    nu = (P.y * Q.x - Q.y * P.x) * dx;
  }
  FieldElement x3 = lambda * lambda + E.a1() * lambda - E.a2() - P.x - Q.x;
  FieldElement y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

void require_on(const EllipticCurve& E, const CurvePoint& P) {
  if (!E.contains(P)) throw InvalidInput("point " + P.to_string() + " is not on " + E.to_string());
}

}  // namespace

CurvePoint point_neg(const EllipticCurve& E, const CurvePoint& P) {
  if (P.infinity) return P;
  return CurvePoint::affine(P.x, -P.y - E.a1() * P.x - E.a3());
}

CurvePoint point_add(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  require_on(E, P);
  require_on(E, Q);
  return add_unchecked(E, P, Q);
}

CurvePoint point_mul(const EllipticCurve& E, long n, const CurvePoint& P) {
  require_on(E, P);
  CurvePoint base = n < 0 ? point_neg(E, P) : P;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  CurvePoint acc;
  while (k > 0) {
    if (k & 1UL) acc = add_unchecked(E, acc, base);
    k >>= 1U;
    if (k > 0) base = add_unchecked(E, base, base);
  }
  return acc;
}

std::optional<long> point_order(const EllipticCurve& E, const CurvePoint& P, long bound) {
  require_on(E, P);
  CurvePoint acc = P;
  for (long n = 1; n <= bound; ++n) {
    if (acc.infinity) return n;
    acc = add_unchecked(E, acc, P);
  }
  return std::nullopt;
}

std::pair<EllipticCurve, WeierstrassChange> short_model(const EllipticCurve& E) {
  WeierstrassChange w;
  w.s = -E.a1() / FieldElement(2);
  w.r = -E.b2() / FieldElement(12);
  w.t = -(E.a3() + w.r * E.a1()) / FieldElement(2);
  return {E.change(w), w};
}

EllipticCurve quadratic_twist(const EllipticCurve& E, const FieldElement& U) {
  if (!E.is_short()) throw InvalidInput("quadratic_twist needs a short Weierstrass model");
  if (U.is_zero()) throw InvalidInput("twist parameter must be nonzero");
  FieldElement U2 = U * U;
  return EllipticCurve::short_form(E.field(), E.a4() * U2, E.a6() * U2 * U);
}

CurvePoint twist_point(const CurvePoint& P, const FieldElement& U, const FieldElement& u_cubed_root) {
  if (!(u_cubed_root * u_cubed_root == U * U * U)) throw InvalidInput("supplied root does not square to U^3");
  if (P.infinity) return P;
  return CurvePoint::affine(U * P.x, u_cubed_root * P.y);
}

}  // namespace cubictors
