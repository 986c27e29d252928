#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubictors/numeric.hpp"
#include "cubictors/poly.hpp"

namespace cubictors {

class CubicField;

/// Base field handle. A null handle stands for Q itself.
using Field = std::shared_ptr<const CubicField>;

/// Q(alpha) for an irreducible cubic minpoly (not necessarily monic or integral).
class CubicField {
 public:
  /// Throws InvalidInput unless minpoly has degree 3 and no rational root.
  static Field create(const RationalPoly& minpoly);

  const RationalPoly& minpoly() const { return minpoly_; }
  const Rational& disc() const { return disc_; }
  /// minpoly divided by its leading coefficient; used for reduction.
  const RationalPoly& monic_minpoly() const { return monic_; }

  /// theta = scale * alpha has the monic integral minimal polynomial integral_model().
  const Integer& scale() const { return scale_; }
  const RationalPoly& integral_model() const { return integral_; }
  /// D with D * O_K contained in Z[theta] (D^2 divides disc(integral_model)).
  const Integer& index_bound() const { return index_bound_; }

  bool same_as(const CubicField& o) const;

 private:
  CubicField() = default;
  RationalPoly minpoly_;
  RationalPoly monic_;
  RationalPoly integral_;
  Rational disc_;
  Integer scale_;
  Integer index_bound_;
};

/// True when both handles describe the same field (both Q, or equal monic minpolys).
bool same_field(const Field& a, const Field& b);

/// c0 + c1 alpha + c2 alpha^2. Elements with a null field are rationals.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Rational& q) : c_{q, Rational(), Rational()} {}  // NOLINT(google-explicit-constructor)
  FieldElement(long q) : FieldElement(Rational(q)) {}                 // NOLINT(google-explicit-constructor)
  FieldElement(Field K, const Rational& q) : K_(std::move(K)), c_{q, Rational(), Rational()} {}
  FieldElement(Field K, std::array<Rational, 3> coords);

  static FieldElement generator(const Field& K);

  const Field& field() const { return K_; }
  const std::array<Rational, 3>& coords() const { return c_; }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero(); }
  std::optional<Rational> as_rational() const;
  bool is_zero() const { return c_[0].is_zero() && is_rational(); }

  /// The same value viewed in K (a rational may be promoted to any field).
  FieldElement in(const Field& K) const;

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  std::string to_string() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator-(const FieldElement& a);
  /// Coordinate-wise; fields must be compatible.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void adopt(const FieldElement& o);
  Field K_;
  std::array<Rational, 3> c_;
};

/// Throws DivisionByZero for a = 0.
FieldElement element_inverse(const FieldElement& a);

/// f(x) for f over Q.
FieldElement evaluate(const RationalPoly& f, const FieldElement& x);

/// Characteristic polynomial of multiplication by a on K (degree 3; (x - q)^3 for rationals).
RationalPoly charpoly(const FieldElement& a);
Rational norm(const FieldElement& a);
Rational trace(const FieldElement& a);

enum class GaloisType { Cyclic, TotallyRealNonGalois, Complex };

struct FieldClass {
  GaloisType galois_type;
  bool pure_candidate;
  friend bool operator==(const FieldClass&, const FieldClass&) = default;
};

std::string to_string(GaloisType t);
FieldClass classify(const CubicField& K);

/// Roots of the minpoly: real ones ascending, then the complex pair by imaginary part.
std::vector<numeric::BigComplex> embeddings(const CubicField& K, long bits);
std::vector<numeric::NumericRoot> embeddings_with_radius(const CubicField& K, long bits);

numeric::BigComplex embed(const FieldElement& a, const numeric::BigComplex& alpha_image);

struct RootOptions {
  long bits = 128;
  long max_bits = 1024;
};

/// Exactly the roots of f lying in K (Q when K is null), distinct, sorted by coordinates.
/// Throws Undecided when numeric reconstruction cannot settle the answer below max_bits.
std::vector<FieldElement> roots_in_field(const RationalPoly& f, const Field& K, const RootOptions& opts = {});

/// All beta in K with beta^n = c.
std::vector<FieldElement> nth_roots_in_field(const FieldElement& c, int n, const Field& K,
                                             const RootOptions& opts = {});

/// Square root with positive first embedding, if c is a square in K.
std::optional<FieldElement> sqrt_in_field(const FieldElement& c, const Field& K, const RootOptions& opts = {});

/// Sign of the real part of the first embedding, the second breaking ties.
int embedding_sign(const FieldElement& a);

}  // namespace cubictors
