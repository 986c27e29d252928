#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubictors/rational.hpp"

namespace cubictors {

/// Dense univariate polynomial over Q, constant term first.
///
/// No trailing zero coefficient is ever stored, so the zero polynomial has an
/// empty coefficient vector and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs)
      : RationalPoly(std::vector<Rational>(coeffs)) {}

  static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }
  static RationalPoly monomial(const Rational& c, int k);
  static RationalPoly x() { return monomial(Rational(1), 1); }
  /// Builds a polynomial from integer coefficients, constant term first.
  static RationalPoly from_integers(std::span<const Integer> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::span<const Rational> coefficients() const { return c_; }
  /// Coefficient of x^i; zero outside [0, degree].
  const Rational& operator[](int i) const;
  const Rational& leading() const;

  RationalPoly derivative() const;
  RationalPoly monic() const;
  RationalPoly compose(const RationalPoly& inner) const;
  /// f(c x) for a scalar c.
  RationalPoly scale_variable(const Rational& c) const;

  Rational operator()(const Rational& x) const;

  /// Horner evaluation in any ring T that accepts Rational scalars.
  template <class T>
  T evaluate(const T& x, const T& zero) const {
    T acc = zero;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  /// Positive rational c with f = c * F for a primitive F in Z[x] with positive leading coefficient.
  Rational content() const;
  /// The primitive integer model F described in content().
  std::vector<Integer> primitive_integer() const;

  std::string to_string(std::string_view var = "x") const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator-(const RationalPoly& a);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  RationalPoly pow(unsigned e) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division a = q b + r with deg r < deg b. Throws DivisionByZero for b = 0.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
RationalPoly remainder(const RationalPoly& a, const RationalPoly& b);
/// Quotient of an exact division; throws InvalidInput if b does not divide a.
RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b);
bool divides(const RationalPoly& b, const RationalPoly& a);

/// Monic gcd (zero if both are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

struct ExtendedGcd {
  RationalPoly g;  ///< monic gcd
  RationalPoly s;  ///< s a + t b = g
  RationalPoly t;
};
ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b);

/// Res(f, g) through the subresultant pseudo-remainder sequence over Z.
Rational resultant(const RationalPoly& f, const RationalPoly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Requires deg f >= 2.
Rational discriminant(const RationalPoly& f);

/// f / gcd(f, f'), made monic.
RationalPoly squarefree_part(const RationalPoly& f);
bool is_squarefree(const RationalPoly& f);

/// All rational roots with multiplicity, ascending.
std::vector<Rational> rational_roots(const RationalPoly& f);
/// Distinct rational roots, ascending.
std::vector<Rational> distinct_rational_roots(const RationalPoly& f);

/// Irreducibility over Q for degree <= 3 (rational-root test). Throws InvalidInput for higher degree.
bool is_irreducible_low_degree(const RationalPoly& f);

}  // namespace cubictors
