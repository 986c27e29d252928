#include "cubictors/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cubictors/errors.hpp"
#include "int_poly.hpp"

namespace cubictors {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::monomial(const Rational& c, int k) {
  if (k < 0) throw InvalidInput("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::from_integers(std::span<const Integer> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& a : coeffs) v.emplace_back(a);
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& RationalPoly::operator[](int i) const {
  static const Rational kZero;
  if (i < 0 || i > degree()) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rational& RationalPoly::leading() const {
  if (is_zero()) throw InvalidInput("leading coefficient of the zero polynomial");
  return c_.back();
}

RationalPoly RationalPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = leading().inverse();
  return *this * inv;
}

RationalPoly RationalPoly::compose(const RationalPoly& inner) const {
  RationalPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

RationalPoly RationalPoly::scale_variable(const Rational& c) const {
  std::vector<Rational> v(c_);
  Rational p(1);
  for (auto& a : v) {
    a *= p;
    p *= c;
  }
  return RationalPoly(std::move(v));
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational RationalPoly::content() const {
  if (is_zero()) return Rational(0);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& a : c_) {
    if (a.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.value().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.value().get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  return leading().sign() < 0 ? -c : c;
}

std::vector<Integer> RationalPoly::primitive_integer() const {
  std::vector<Integer> out;
  if (is_zero()) return out;
  Rational inv = content().inverse();
  out.reserve(c_.size());
  for (const auto& a : c_) {
    Rational s = a * inv;
    out.push_back(s.numerator());
  }
  return out;
}

std::string RationalPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    Rational mag = a.abs();
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag.to_string();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= s;
  return *this;
}

RationalPoly operator-(const RationalPoly& a) {
  std::vector<Rational> v(a.c_);
  for (auto& x : v) x = -x;
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1);
  mpq_class t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a.c_[i].value().get_mpq_t(), b.c_[j].value().get_mpq_t());
      mpq_add(v[i + j].get_mpq_t(), v[i + j].get_mpq_t(), t.get_mpq_t());
    }
  }
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto& q : v) out.emplace_back(q);
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::pow(unsigned e) const {
  RationalPoly result = constant(Rational(1));
  RationalPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly{}, a};
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Rational f = top * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

RationalPoly remainder(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidInput("polynomial division is not exact");
  return q;
}

bool divides(const RationalPoly& b, const RationalPoly& a) { return remainder(a, b).is_zero(); }

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  detail::IntPoly g = detail::primitive_prs_gcd(detail::to_int_poly(a), detail::to_int_poly(b));
  return detail::from_int_poly(g).monic();
}

ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r0 = a, r1 = b;
  RationalPoly s0 = RationalPoly::constant(1), s1;
  RationalPoly t0, t1 = RationalPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPoly s2 = s0 - q * s1;
    RationalPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Rational resultant(const RationalPoly& f, const RationalPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidInput("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return Rational(0);
  // Res(c F, d G) = c^deg G d^deg F Res(F, G)
  Rational cf = f.content();
  Rational cg = g.content();
  Integer r = detail::subresultant_resultant(f.primitive_integer(), g.primitive_integer());
  return cf.pow(g.degree()) * cg.pow(f.degree()) * Rational(r);
}

Rational discriminant(const RationalPoly& f) {
  const int n = f.degree();
  if (n < 2) throw InvalidInput("discriminant needs degree >= 2");
  Rational res = resultant(f, f.derivative()) / f.leading();
  return ((n * (n - 1) / 2) % 2 == 0) ? res : -res;
}

RationalPoly squarefree_part(const RationalPoly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree part of zero");
  if (f.degree() < 1) return RationalPoly::constant(1);
  RationalPoly g = gcd(f, f.derivative());
  return exact_quotient(f, g).monic();
}

bool is_squarefree(const RationalPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() < 2) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

bool is_irreducible_low_degree(const RationalPoly& f) {
  if (f.degree() < 1) throw InvalidInput("irreducibility of a constant");
  if (f.degree() > 3) throw InvalidInput("irreducibility test is only available up to degree 3");
  if (f.degree() == 1) return true;
  return distinct_rational_roots(f).empty();
}

}  // namespace cubictors
