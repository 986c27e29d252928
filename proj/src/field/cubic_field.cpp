#include <algorithm>

#include "cubictors/errors.hpp"
#include "cubictors/field.hpp"

namespace cubictors {

namespace {

// Product of p^floor(e/2) over small p, times the unfactored cofactor (or its root when square).
Integer index_bound_of(const Integer& disc) {
  Integer m = abs(disc);
  Integer bound = 1;
  for (unsigned long p = 2; p < 100000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) bound *= p;
  }
  if (m > 1) {
    auto r = exact_sqrt(m);
    bound *= r ? *r : m;
  }
  return bound;
}

std::array<Rational, 3> multiply(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b,
                                 const RationalPoly& monic) {
  std::array<Rational, 5> p;
  for (int i = 0; i < 3; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j) p[i + j] += a[i] * b[j];
  }
  for (int k = 4; k >= 3; --k) {
    if (p[k].is_zero()) continue;
    Rational top = p[k];
    p[k] = Rational();
    for (int j = 0; j < 3; ++j) p[k - 3 + j] -= top * monic[j];
  }
  return {p[0], p[1], p[2]};
}

}  // namespace

Field CubicField::create(const RationalPoly& minpoly) {
  if (minpoly.degree() != 3) throw InvalidInput("a cubic field needs a degree-3 polynomial");
  if (!distinct_rational_roots(minpoly).empty()) {
    throw InvalidInput("defining polynomial " + minpoly.to_string() + " is reducible over Q");
  }
  std::shared_ptr<CubicField> K(new CubicField());
  K->minpoly_ = minpoly;
  K->monic_ = minpoly.monic();
  K->disc_ = discriminant(minpoly);
  std::vector<Integer> prim = minpoly.primitive_integer();
  K->scale_ = prim[3];
  // theta = L alpha: theta^3 + a2 theta^2 + a1 L theta + a0 L^2
  K->integral_ = RationalPoly::from_integers(
      std::vector<Integer>{prim[0] * prim[3] * prim[3], prim[1] * prim[3], prim[2], Integer(1)});
  K->index_bound_ = index_bound_of(discriminant(K->integral_).numerator());
  return K;
}

bool CubicField::same_as(const CubicField& o) const { return this == &o || monic_ == o.monic_; }

bool same_field(const Field& a, const Field& b) {
  if (!a || !b) return !a && !b;
  return a->same_as(*b);
}

FieldElement::FieldElement(Field K, std::array<Rational, 3> coords) : K_(std::move(K)), c_(std::move(coords)) {
  if (!K_ && !is_rational()) throw InvalidInput("irrational coordinates need a cubic field");
}

FieldElement FieldElement::generator(const Field& K) {
  if (!K) throw InvalidInput("Q has no cubic generator");
  return FieldElement(K, {Rational(), Rational(1), Rational()});
}

std::optional<Rational> FieldElement::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

FieldElement FieldElement::in(const Field& K) const {
  if (same_field(K_, K)) return *this;
  if (!K_ || is_rational()) {
    if (!is_rational()) throw InvalidInput("element does not lie in the requested field");
    return FieldElement(K, c_[0]);
  }
  throw InvalidInput("element does not lie in the requested field");
}

void FieldElement::adopt(const FieldElement& o) {
  if (!o.K_ || same_field(K_, o.K_)) return;
  if (!K_) {
    K_ = o.K_;
    return;
  }
  throw InvalidInput("arithmetic between elements of different cubic fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  adopt(o);
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  adopt(o);
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  adopt(o);
  if (o.is_rational()) {
    for (auto& c : c_) c *= o.c_[0];
  } else if (is_rational()) {
    Rational s = c_[0];
    c_ = o.c_;
    for (auto& c : c_) c *= s;
  } else {
    c_ = multiply(c_, o.c_, K_->monic_minpoly());
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement operator-(const FieldElement& a) {
  FieldElement r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.K_ && b.K_ && !same_field(a.K_, b.K_)) return false;
  return a.c_ == b.c_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  if (is_rational()) return FieldElement(K_, c_[0].inverse());
  RationalPoly lift({c_[0], c_[1], c_[2]});
  ExtendedGcd eg = extended_gcd(lift, K_->monic_minpoly());
  RationalPoly s = remainder(eg.s, K_->monic_minpoly());
  return FieldElement(K_, {s[0], s[1], s[2]});
}

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement acc(K_, Rational(1));
  while (k > 0) {
    if (k & 1UL) acc *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return acc;
}

std::string FieldElement::to_string() const { return RationalPoly({c_[0], c_[1], c_[2]}).to_string("a"); }

FieldElement element_inverse(const FieldElement& a) { return a.inverse(); }

FieldElement evaluate(const RationalPoly& f, const FieldElement& x) {
  FieldElement acc(x.field(), Rational());
  auto c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += FieldElement(*it);
  }
  return acc;
}

RationalPoly charpoly(const FieldElement& a) {
  if (a.is_rational()) {
    RationalPoly lin({-a.coords()[0], Rational(1)});
    return lin.pow(3);
  }
  // columns: coordinates of a, a alpha, a alpha^2
  FieldElement alpha = FieldElement::generator(a.field());
  std::array<std::array<Rational, 3>, 3> m;
  FieldElement col = a;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) m[i][j] = col.coords()[i];
    col *= alpha;
  }
  Rational tr = m[0][0] + m[1][1] + m[2][2];
  Rational minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                    m[1][1] * m[2][2] - m[1][2] * m[2][1];
  Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return RationalPoly({-det, minors, -tr, Rational(1)});
}

Rational norm(const FieldElement& a) { return -charpoly(a)[0]; }
Rational trace(const FieldElement& a) { return -charpoly(a)[2]; }

std::string to_string(GaloisType t) {
  switch (t) {
    case GaloisType::Cyclic:
      return "CYCLIC";
    case GaloisType::TotallyRealNonGalois:
      return "TOTALLY_REAL_NON_GALOIS";
    case GaloisType::Complex:
      return "COMPLEX";
  }
  return "?";
}

FieldClass classify(const CubicField& K) {
  const Rational& d = K.disc();
  FieldClass out{GaloisType::TotallyRealNonGalois, false};
  if (is_square_rational(d)) {
    out.galois_type = GaloisType::Cyclic;
  } else if (d.sign() < 0) {
    out.galois_type = GaloisType::Complex;
    out.pure_candidate = is_square_rational(d / Rational(-27)).has_value();
  }
  return out;
}

std::vector<numeric::NumericRoot> embeddings_with_radius(const CubicField& K, long bits) {
  using numeric::BigFloat;
  for (long b = std::max(bits, 64L);; b *= 2) {
    auto roots = numeric::polynomial_roots(K.monic_minpoly(), b);
    if (!roots) {
      if (b > (1L << 16)) throw Undecided("embeddings did not converge");
      continue;
    }
    numeric::PrecisionScope scope(b);
    auto& r = *roots;
    if (K.disc().sign() > 0) {
      for (auto& z : r) z.z.im = BigFloat(0.0);
      std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.z.re < y.z.re; });
    } else {
      auto real_it = std::min_element(r.begin(), r.end(), [](const auto& x, const auto& y) {
        return abs(x.z.im) < abs(y.z.im);
      });
      std::iter_swap(r.begin(), real_it);
      r[0].z.im = BigFloat(0.0);
      if (r[2].z.im < r[1].z.im) std::swap(r[1], r[2]);
    }
    return r;
  }
}

std::vector<numeric::BigComplex> embeddings(const CubicField& K, long bits) {
  std::vector<numeric::BigComplex> out;
  for (auto& r : embeddings_with_radius(K, bits)) out.push_back(std::move(r.z));
  return out;
}

numeric::BigComplex embed(const FieldElement& a, const numeric::BigComplex& alpha_image) {
  using numeric::BigComplex;
  const auto& c = a.coords();
  return BigComplex(c[0]) + alpha_image * (BigComplex(c[1]) + alpha_image * BigComplex(c[2]));
}

int embedding_sign(const FieldElement& a) {
  if (a.is_rational()) return a.coords()[0].sign();
  // The first embedding is real, so it never vanishes on a nonzero element.
  for (long bits = 128; bits <= (1L << 16); bits *= 2) {
    auto emb = embeddings_with_radius(*a.field(), bits);
    numeric::PrecisionScope scope(bits);
    const auto& e = emb[0];
    numeric::BigFloat v = embed(a, e.z).re;
    numeric::BigFloat slope = abs(numeric::BigFloat(a.coords()[1])) +
                              abs(numeric::BigFloat(a.coords()[2])) * (abs(e.z) + e.radius) * numeric::BigFloat(2.0);
    numeric::BigFloat err = slope * e.radius + abs(v) * numeric::pow2(-bits + 8);
    if (abs(v) > err) return v.sign();
  }
  throw Undecided("could not determine the sign of an embedding");
}

}  // namespace cubictors
