#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubictors/poly.hpp"
#include "cubictors/rational.hpp"

namespace cubictors::numeric {

/// Working precision (bits) used for newly created BigFloat values on this thread.
long working_precision();

/// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

/// RAII wrapper over an MPFR real.
class BigFloat {
 public:
  BigFloat();
  BigFloat(double d);  // NOLINT(google-explicit-constructor)
  explicit BigFloat(const Integer& n);
  explicit BigFloat(const Rational& q);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log2 |x| (approximate); -inf for zero.
  double log2_abs() const;
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  /// Nearest integer.
  Integer round() const;
  /// Exact binary value as a rational.
  Rational to_rational() const;
  std::string to_string(int digits = 12) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(const BigFloat& a);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
/// 2^e at working precision.
BigFloat pow2(long e);

struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() = default;
  BigComplex(BigFloat r, BigFloat i = BigFloat(0.0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  explicit BigComplex(const Rational& q) : re(q), im(0.0) {}

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
};

BigFloat abs(const BigComplex& z);
BigComplex conj(const BigComplex& z);

/// A numerically located root together with an inclusion radius.
struct NumericRoot {
  BigComplex z;
  BigFloat radius;
};

/// All complex roots of a squarefree polynomial (Aberth-Ehrlich iteration).
///
/// Each root carries an inclusion radius estimate that accounts for both the
/// Weierstrass correction and the rounding noise of evaluating f. Returns
/// nullopt when the iteration fails to converge at the given precision.
std::optional<std::vector<NumericRoot>> polynomial_roots(const RationalPoly& f, long bits);

/// Smallest-denominator rational within tol of x, provided its denominator is at
/// most max_den. Continued-fraction based (best approximations).
std::optional<Rational> reconstruct_rational(const BigFloat& x, const BigFloat& tol,
                                             const Integer& max_den);

}  // namespace cubictors::numeric
