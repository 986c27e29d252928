#include <algorithm>
#include <cmath>
#include <numbers>

#include "cubictors/errors.hpp"
#include "cubictors/numeric.hpp"

namespace cubictors::numeric {

namespace {

struct Evaluation {
  BigComplex value;
  BigComplex derivative;
  BigFloat noise;  // bound on rounding error of value
};

Evaluation horner(const std::vector<BigFloat>& a, const std::vector<BigFloat>& abs_a, const BigComplex& z) {
  const std::size_t n = a.size() - 1;
  BigComplex p(a[n]);
  BigComplex dp(BigFloat(0.0));
  BigFloat r = abs(z);
  BigFloat mag = abs_a[n];
  for (std::size_t k = n; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + BigComplex(a[k]);
    mag = mag * r + abs_a[k];
  }
  // Horner error is bounded by ~2n u sum |a_k||z|^k.
  BigFloat noise = mag * pow2(-working_precision() + 2) * BigFloat(static_cast<double>(2 * n + 2));
  return {std::move(p), std::move(dp), std::move(noise)};
}

/// Initial approximations on circles whose radii come from the upper convex
/// hull of (k, log2 |a_k|) (Newton polygon).
std::vector<BigComplex> initial_guesses(const std::vector<BigFloat>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<int> idx;
  std::vector<double> lg;
  for (int k = 0; k <= n; ++k) {
    if (!a[static_cast<std::size_t>(k)].is_zero()) {
      idx.push_back(k);
      lg.push_back(a[static_cast<std::size_t>(k)].log2_abs());
    }
  }
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (hull.size() >= 2) {
      std::size_t p = hull[hull.size() - 2];
      std::size_t q = hull.back();
      // drop q if it lies on or below segment p-i
      double cross = (idx[q] - idx[p]) * (lg[i] - lg[p]) - (lg[q] - lg[p]) * (idx[i] - idx[p]);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  std::vector<BigComplex> z;
  z.reserve(static_cast<std::size_t>(n));
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    int i = idx[hull[h]];
    int j = idx[hull[h + 1]];
    int m = j - i;
    double log_r = (lg[hull[h]] - lg[hull[h + 1]]) / m;
    for (int l = 0; l < m; ++l) {
      double theta = two_pi * l / m + two_pi * i / n + 0.4;
      BigFloat rad(std::exp2(log_r - std::floor(log_r)));
      mpfr_mul_2si(rad.get(), rad.get(), static_cast<long>(std::floor(log_r)), MPFR_RNDN);
      z.emplace_back(rad * BigFloat(std::cos(theta)), rad * BigFloat(std::sin(theta)));
    }
  }
  return z;
}

}  // namespace

std::optional<std::vector<NumericRoot>> polynomial_roots(const RationalPoly& f, long bits) {
  if (f.degree() < 1) throw InvalidInput("polynomial_roots needs degree >= 1");
  PrecisionScope scope(bits);

  std::vector<NumericRoot> out;
  RationalPoly g = f;
  if (g[0].is_zero()) {
    out.push_back({BigComplex(BigFloat(0.0)), BigFloat(0.0)});
    g = exact_quotient(g, RationalPoly::x());
    if (g[0].is_zero()) throw InvalidInput("polynomial_roots needs a squarefree polynomial");
  }
  const int n = g.degree();
  if (n == 0) return out;

  std::vector<BigFloat> a;
  std::vector<BigFloat> abs_a;
  for (int k = 0; k <= n; ++k) {
    a.emplace_back(g[k]);
    abs_a.push_back(abs(a.back()));
  }

  if (n == 1) {
    BigFloat r = -a[0] / a[1];
    out.push_back({BigComplex(r), abs(r) * pow2(-bits + 4)});
    return out;
  }

  std::vector<BigComplex> z = initial_guesses(a);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  int remaining = n;
  const int max_iter = 400 + 10 * n;
  for (int iter = 0; iter < max_iter && remaining > 0; ++iter) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      if (done[i]) continue;
      Evaluation ev = horner(a, abs_a, z[i]);
      if (abs(ev.value) <= ev.noise) {
        done[i] = true;
        --remaining;
      }
      if (ev.derivative.re.is_zero() && ev.derivative.im.is_zero()) {
        z[i] += BigComplex(pow2(-bits / 4));
        continue;
      }
      BigComplex newton = ev.value / ev.derivative;
      BigComplex sum(BigFloat(0.0));
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        if (j == i) continue;
        BigComplex d = z[i] - z[j];
        if (d.re.is_zero() && d.im.is_zero()) continue;
        sum += BigComplex(BigFloat(1.0)) / d;
      }
      BigComplex denom = BigComplex(BigFloat(1.0)) - newton * sum;
      BigComplex step = (denom.re.is_zero() && denom.im.is_zero()) ? newton : newton / denom;
      z[i] -= step;
    }
  }
  if (remaining > 0) return std::nullopt;

  // Inclusion radii: n * (|p(z_i)| + noise) / (|a_n| prod |z_i - z_j|).
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    Evaluation ev = horner(a, abs_a, z[i]);
    BigFloat prod = abs_a[static_cast<std::size_t>(n)];
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      if (j != i) prod *= abs(z[i] - z[j]);
    }
    if (prod.is_zero()) return std::nullopt;
    BigFloat radius = (abs(ev.value) + ev.noise) / prod * BigFloat(static_cast<double>(n));
    out.push_back({z[i], std::move(radius)});
  }
  return out;
}

std::optional<Rational> reconstruct_rational(const BigFloat& x, const BigFloat& tol, const Integer& max_den) {
  Rational lo = (x - abs(tol)).to_rational();
  Rational hi = (x + abs(tol)).to_rational();
  bool negate = false;
  if (hi.sign() < 0) {
    negate = true;
    Rational t = -lo;
    lo = -hi;
    hi = t;
  } else if (lo.sign() <= 0) {
    return Rational(0);
  }
  // Simplest rational in [lo, hi] with 0 < lo <= hi via continued fractions.
  std::vector<Integer> quotients;
  Integer last;
  while (true) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.value().get_num_mpz_t(), lo.value().get_den_mpz_t());
    if (Rational(fl) == lo || Rational(Integer(fl + 1)) <= hi) {
      last = (Rational(fl) == lo) ? fl : Integer(fl + 1);
      break;
    }
    quotients.push_back(fl);
    Rational nlo = (hi - Rational(fl)).inverse();
    Rational nhi = (lo - Rational(fl)).inverse();
    lo = nlo;
    hi = nhi;
    if (quotients.size() > 100000) return std::nullopt;
  }
  Rational value(last);
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) value = Rational(*it) + value.inverse();
  if (value.denominator() > max_den) return std::nullopt;
  return negate ? -value : value;
}

}  // namespace cubictors::numeric
