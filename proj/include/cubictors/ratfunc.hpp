#pragma once

#include <string>
#include <string_view>

#include "cubictors/poly.hpp"

namespace cubictors {

/// num / den in Q(x), kept in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(RationalPoly::constant(1)) {}
  RationalFunction(const Rational& c) : num_(RationalPoly::constant(c)), den_(RationalPoly::constant(1)) {}  // NOLINT
  RationalFunction(RationalPoly p) : num_(std::move(p)), den_(RationalPoly::constant(1)) {}  // NOLINT
  RationalFunction(RationalPoly num, RationalPoly den);

  static RationalFunction variable() { return RationalFunction(RationalPoly::x()); }

  /// Parses an arithmetic expression in a single variable: integers, +, -, *, /, ^ with a
  /// nonnegative integer exponent, parentheses and implicit multiplication ("27u^4(u-1)").
  static RationalFunction parse(std::string_view text, std::string_view var = "u");

  const RationalPoly& numerator() const { return num_; }
  const RationalPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Value at x; throws DivisionByZero at a pole.
  Rational operator()(const Rational& x) const;
  /// f(g(x)).
  RationalFunction compose(const RationalFunction& g) const;
  RationalFunction pow(long e) const;

  std::string to_string(std::string_view var = "u") const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalPoly num_;
  RationalPoly den_;
};

}  // namespace cubictors
