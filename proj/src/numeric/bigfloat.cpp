#include <cmath>
#include <vector>

#include "cubictors/numeric.hpp"

namespace cubictors::numeric {

namespace {
thread_local long tl_precision = 128;
}

long working_precision() { return tl_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(tl_precision) { tl_precision = bits; }
PrecisionScope::~PrecisionScope() { tl_precision = saved_; }

BigFloat::BigFloat() {
  mpfr_init2(v_, tl_precision);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double d) {
  mpfr_init2(v_, tl_precision);
  mpfr_set_d(v_, d, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& n) {
  mpfr_init2(v_, tl_precision);
  mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q) {
  mpfr_init2(v_, tl_precision);
  mpfr_set_q(v_, q.value().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

double BigFloat::log2_abs() const {
  if (is_zero()) return -INFINITY;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

Integer BigFloat::round() const {
  Integer out;
  mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDN);
  return out;
}

Rational BigFloat::to_rational() const {
  if (is_zero()) return Rational(0);
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Integer p2 = 1;
  if (e >= 0) {
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(m);
  }
  mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(m, p2);
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a);
  mpfr_neg(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat pow2(long e) {
  BigFloat r(1.0);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat den = o.re * o.re + o.im * o.im;
  BigFloat r = (re * o.re + im * o.im) / den;
  BigFloat i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigFloat abs(const BigComplex& z) {
  BigFloat r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

}  // namespace cubictors::numeric
