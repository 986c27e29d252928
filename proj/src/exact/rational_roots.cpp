#include <algorithm>
#include <optional>

#include "cubictors/errors.hpp"
#include "cubictors/numeric.hpp"
#include "cubictors/poly.hpp"
#include "int_poly.hpp"

namespace cubictors {

namespace {

using detail::IntPoly;

constexpr long kMaxBits = 1L << 15;

// Positive divisors of |n| when n factors over primes below the trial bound.
std::optional<std::vector<Integer>> small_divisors(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) return std::nullopt;
  std::vector<std::pair<Integer, unsigned>> fac;
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    fac.emplace_back(Integer(p), e);
  }
  if (m != 1) return std::nullopt;
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : fac) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 20000) return std::nullopt;
  }
  return divs;
}

bool is_root(const IntPoly& f, const Integer& p, const Integer& q) {
  return detail::homogeneous_value(f, p, q) == 0;
}

std::vector<Rational> by_divisors(const IntPoly& f, const std::vector<Integer>& dp,
                                  const std::vector<Integer>& dq) {
  std::vector<Rational> out;
  for (const auto& q : dq) {
    for (const auto& p : dp) {
      Integer g = gcd(p, q);
      if (g != 1) continue;
      if (is_root(f, p, q)) out.emplace_back(p, q);
      if (is_root(f, -p, q)) out.emplace_back(-p, q);
    }
  }
  return out;
}

// Candidates round(a_n z)/a_n for each numerically real root z.
std::vector<Rational> by_numeric(const IntPoly& f) {
  const RationalPoly g = detail::from_int_poly(f);
  const Integer& an = f.back();
  for (long bits = 128; bits <= kMaxBits; bits *= 2) {
    auto roots = numeric::polynomial_roots(g, bits);
    if (!roots) continue;
    numeric::PrecisionScope scope(bits);
    const numeric::BigFloat an_f(an);
    const numeric::BigFloat quarter(0.25);
    bool resolved = true;
    std::vector<Rational> out;
    for (const auto& r : *roots) {
      if (abs(r.z.im) > r.radius) continue;
      if (r.radius * abs(an_f) >= quarter) {
        resolved = false;
        break;
      }
      Integer p = (r.z.re * an_f).round();
      if (is_root(f, p, an)) out.emplace_back(p, an);
    }
    if (resolved) return out;
  }
  throw Undecided("rational root isolation did not converge");
}

}  // namespace

std::vector<Rational> distinct_rational_roots(const RationalPoly& f) {
  if (f.is_zero()) throw InvalidInput("rational roots of the zero polynomial");
  if (f.degree() < 1) return {};
  IntPoly g = detail::to_int_poly(squarefree_part(f));
  std::vector<Rational> out;
  if (g[0] == 0) {
    out.emplace_back(0);
    g.erase(g.begin());
  }
  if (detail::degree(g) >= 1) {
    std::vector<Rational> found;
    if (detail::degree(g) == 1) {
      found.emplace_back(-g[0], g[1]);
    } else {
      auto dp = small_divisors(g.front());
      auto dq = dp ? small_divisors(g.back()) : std::nullopt;
      if (dp && dq && dp->size() * dq->size() <= 20000) {
        found = by_divisors(g, *dp, *dq);
      } else {
        found = by_numeric(g);
      }
    }
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> rational_roots(const RationalPoly& f) {
  std::vector<Rational> out;
  for (const auto& r : distinct_rational_roots(f)) {
    RationalPoly lin({-r, Rational(1)});
    RationalPoly rest = f;
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      out.push_back(r);
      rest = std::move(q);
    }
  }
  return out;
}

}  // namespace cubictors
