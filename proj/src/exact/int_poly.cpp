#include "int_poly.hpp"

#include <utility>

namespace cubictors::detail {

namespace {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

IntPoly to_int_poly(const RationalPoly& f) { return f.primitive_integer(); }

RationalPoly from_int_poly(const IntPoly& f) { return RationalPoly::from_integers(f); }

int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& a : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& f) {
  trim(f);
  if (f.empty()) return;
  Integer g = content(f);
  if (f.back() < 0) g = -g;
  if (g == 1) return;
  for (auto& a : f) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  trim(r);
  const int db = degree(b);
  const int delta = degree(a) - db;
  if (delta < 0) return r;
  const Integer& lb = b.back();
  int steps = 0;
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    Integer lr = r.back();
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= lr * b[static_cast<std::size_t>(j)];
    trim(r);
    ++steps;
  }
  const int missing = delta + 1 - steps;
  if (missing > 0) {
    Integer m = ipow(lb, static_cast<unsigned long>(missing));
    for (auto& c : r) c *= m;
  }
  return r;
}

IntPoly primitive_prs_gcd(IntPoly a, IntPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Integer subresultant_resultant(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Integer ca = content(a);
  Integer cb = content(b);
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
  for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  Integer t = ipow(ca, static_cast<unsigned long>(degree(b))) * ipow(cb, static_cast<unsigned long>(degree(a)));
  int s = 1;
  if (degree(a) < degree(b)) {
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -1;
    std::swap(a, b);
  }
  if (degree(b) == 0) {
    return s * t * ipow(b[0], static_cast<unsigned long>(degree(a)));
  }
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = degree(a) - degree(b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    Integer div = g * ipow(h, static_cast<unsigned long>(delta));
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    b = std::move(r);
    g = a.back();
    // h <- g^delta / h^(delta - 1)
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (degree(b) == 0) {
      const int da = degree(a);
      Integer num = ipow(b[0], static_cast<unsigned long>(da));
      Integer den = ipow(h, static_cast<unsigned long>(da - 1));
      Integer res;
      mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * res;
    }
  }
}

Integer homogeneous_value(const IntPoly& f, const Integer& p, const Integer& q) {
  // sum a_k p^k q^(n-k) by Horner in (p, q)
  Integer acc = 0;
  Integer qpow = 1;
  const int n = degree(f);
  std::vector<Integer> qpows(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    qpows[static_cast<std::size_t>(k)] = qpow;
    qpow *= q;
  }
  for (int k = n; k >= 0; --k) {
    acc = acc * p + f[static_cast<std::size_t>(k)] * qpows[static_cast<std::size_t>(n - k)];
  }
  return acc;
}

}  // namespace cubictors::detail
