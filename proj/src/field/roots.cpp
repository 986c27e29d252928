#include <algorithm>
#include <array>

#include "cubictors/errors.hpp"
#include "cubictors/field.hpp"

namespace cubictors {

namespace {

using numeric::BigComplex;
using numeric::BigFloat;
using numeric::NumericRoot;

struct Candidate {
  BigComplex w;
  BigFloat r;
};

// e_k of three values, and the same for upper bounds of their moduli.
std::array<BigComplex, 3> elementary(const std::array<BigComplex, 3>& w) {
  return {w[0] + w[1] + w[2], w[0] * w[1] + w[0] * w[2] + w[1] * w[2], w[0] * w[1] * w[2]};
}

std::array<BigFloat, 3> elementary(const std::array<BigFloat, 3>& a) {
  return {a[0] + a[1] + a[2], a[0] * a[1] + a[0] * a[2] + a[1] * a[2], a[0] * a[1] * a[2]};
}

class CubicFactorSearch {
 public:
  CubicFactorSearch(const RationalPoly& g, const Field& K, long bits) : g_(g), K_(K), bits_(bits) {}

  // nullopt when the precision is insufficient to decide.
  std::optional<std::vector<FieldElement>> run() {
    auto roots = numeric::polynomial_roots(g_, bits_);
    if (!roots) return std::nullopt;
    emb_ = embeddings_with_radius(*K_, bits_);
    numeric::PrecisionScope scope(bits_);
    const BigFloat scale(K_->scale());
    for (auto& e : emb_) {
      e.z = e.z * BigComplex(scale);
      e.radius = e.radius * scale;
    }
    lc_ = g_.primitive_integer().back();

    std::vector<Candidate> real, upper;
    for (auto& r : *roots) {
      if (abs(r.z.im) <= r.radius) {
        real.push_back({BigComplex(r.z.re), r.radius});
      } else if (r.z.im.sign() > 0) {
        upper.push_back({r.z, r.radius});
      }
    }

    std::vector<FieldElement> out;
    if (K_->disc().sign() > 0) {
      for (std::size_t i = 0; i < real.size(); ++i)
        for (std::size_t j = i + 1; j < real.size(); ++j)
          for (std::size_t k = j + 1; k < real.size(); ++k)
            if (!try_triple({real[i], real[j], real[k]}, out)) return std::nullopt;
    } else {
      for (const auto& a : real)
        for (const auto& c : upper)
          if (!try_triple({a, c, Candidate{numeric::conj(c.w), c.r}}, out)) return std::nullopt;
    }
    return out;
  }

 private:
  // false when precision is insufficient.
  bool try_triple(const std::array<Candidate, 3>& t, std::vector<FieldElement>& out) {
    std::array<BigComplex, 3> w{t[0].w, t[1].w, t[2].w};
    std::array<BigFloat, 3> mod{abs(w[0]), abs(w[1]), abs(w[2])};
    std::array<BigFloat, 3> up{mod[0] + t[0].r, mod[1] + t[1].r, mod[2] + t[2].r};
    auto e = elementary(w);
    auto em = elementary(mod);
    auto eu = elementary(up);
    const BigFloat quarter(0.25);
    std::array<Integer, 3> rounded;
    BigFloat lck(1.0);
    const BigFloat lcf(lc_);
    for (int k = 0; k < 3; ++k) {
      lck = lck * abs(lcf);
      BigFloat v = e[k].re * lck;
      BigFloat err = (eu[k] - em[k]) * lck + eu[k] * lck * numeric::pow2(-bits_ + 8);
      if (err >= quarter) return false;
      rounded[k] = v.round();
      if (abs(v - BigFloat(rounded[k])) > err) return true;
    }
    // (x - lc w1)(x - lc w2)(x - lc w3) has integer coefficients; rescale.
    Rational l(lc_);
    RationalPoly m({-Rational(rounded[2]) / l.pow(3), Rational(rounded[1]) / l.pow(2), -Rational(rounded[0]) / l,
                    Rational(1)});
    if (!divides(m, g_)) return true;
    if (!is_square_rational(discriminant(m) / K_->disc())) return true;
    if (!distinct_rational_roots(m).empty()) return true;

    const Integer max_den = m.primitive_integer().back() * K_->index_bound();
    std::vector<std::array<int, 3>> perms;
    if (K_->disc().sign() > 0) {
      perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    } else {
      perms = {{0, 1, 2}, {0, 2, 1}};
    }
    for (const auto& p : perms) {
      auto beta = solve(t, p, max_den);
      if (!beta.has_value()) return false;
      if (beta->has_value()) {
        if (!evaluate(m, **beta).is_zero()) return false;
        if (std::find(out.begin(), out.end(), **beta) == out.end()) out.push_back(**beta);
      }
    }
    return true;
  }

  // Outer nullopt: undecided at this precision. Inner nullopt: certified not in K for this assignment.
  std::optional<std::optional<FieldElement>> solve(const std::array<Candidate, 3>& t, const std::array<int, 3>& p,
                                                   const Integer& max_den) {
    std::array<BigComplex, 3> th{emb_[0].z, emb_[1].z, emb_[2].z};
    std::array<BigComplex, 3> w{t[p[0]].w, t[p[1]].w, t[p[2]].w};
    std::array<BigFloat, 3> wr{t[p[0]].r, t[p[1]].r, t[p[2]].r};
    // Lagrange interpolation through (theta_i, w_i); vinv[j][i] = coefficient of x^j contributed by w_i.
    std::array<std::array<BigComplex, 3>, 3> vinv;
    for (int i = 0; i < 3; ++i) {
      int a = (i + 1) % 3;
      int b = (i + 2) % 3;
      BigComplex den = (th[i] - th[a]) * (th[i] - th[b]);
      BigComplex inv = BigComplex(BigFloat(1.0)) / den;
      vinv[2][i] = inv;
      vinv[1][i] = -(th[a] + th[b]) * inv;
      vinv[0][i] = th[a] * th[b] * inv;
    }
    std::array<BigComplex, 3> d;
    for (int j = 0; j < 3; ++j) {
      d[j] = vinv[j][0] * w[0] + vinv[j][1] * w[1] + vinv[j][2] * w[2];
    }
    std::array<BigFloat, 3> delta;
    for (int i = 0; i < 3; ++i) {
      BigComplex slope = d[1] + BigComplex(BigFloat(2.0)) * d[2] * th[i];
      delta[i] = wr[i] + abs(slope) * emb_[i].radius;
    }
    std::array<Rational, 3> coords;
    Rational scale_pow(1);
    for (int j = 0; j < 3; ++j) {
      BigFloat tol(0.0);
      BigFloat mag(0.0);
      for (int i = 0; i < 3; ++i) {
        BigFloat vi = abs(vinv[j][i]);
        tol += vi * delta[i];
        mag += vi * abs(w[i]);
      }
      tol = tol * BigFloat(4.0) + mag * numeric::pow2(-bits_ + 16);
      if (abs(d[j].im) > tol) return std::optional<FieldElement>{};
      auto q = numeric::reconstruct_rational(d[j].re, tol, max_den);
      if (!q) return std::optional<FieldElement>{};
      coords[static_cast<std::size_t>(j)] = *q * scale_pow;
      scale_pow *= Rational(K_->scale());
    }
    return std::optional<FieldElement>{FieldElement(K_, coords)};
  }

  const RationalPoly& g_;
  const Field& K_;
  long bits_;
  std::vector<NumericRoot> emb_;
  Integer lc_;
};

void sort_elements(std::vector<FieldElement>& v) {
  std::sort(v.begin(), v.end(), [](const FieldElement& a, const FieldElement& b) { return a.coords() < b.coords(); });
}

}  // namespace

std::vector<FieldElement> roots_in_field(const RationalPoly& f, const Field& K, const RootOptions& opts) {
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  std::vector<FieldElement> out;
  if (f.degree() < 1) return out;
  RationalPoly g = squarefree_part(f);
  for (const auto& r : distinct_rational_roots(g)) {
    out.emplace_back(K, r);
    g = exact_quotient(g, RationalPoly({-r, Rational(1)}));
  }
  if (K && g.degree() >= 3) {
    for (long bits = std::max(opts.bits, 64L);; bits *= 2) {
      if (bits > opts.max_bits) {
        throw Undecided("root reconstruction in " + K->minpoly().to_string() + " needs more than " +
                        std::to_string(opts.max_bits) + " bits");
      }
      auto found = CubicFactorSearch(g, K, bits).run();
      if (found) {
        out.insert(out.end(), found->begin(), found->end());
        break;
      }
    }
  }
  sort_elements(out);
  return out;
}

std::vector<FieldElement> nth_roots_in_field(const FieldElement& c, int n, const Field& K, const RootOptions& opts) {
  if (n < 1) throw InvalidInput("root index must be positive");
  FieldElement target = c.in(K);
  if (target.is_zero()) return {FieldElement(K, Rational())};
  RationalPoly p;
  if (target.is_rational()) {
    p = RationalPoly::monomial(Rational(1), n) - RationalPoly::constant(target.coords()[0]);
  } else {
    p = charpoly(target).compose(RationalPoly::monomial(Rational(1), n));
  }
  std::vector<FieldElement> out;
  for (auto& b : roots_in_field(p, K, opts)) {
    if (b.pow(n) == target) out.push_back(std::move(b));
  }
  return out;
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& c, const Field& K, const RootOptions& opts) {
  auto roots = nth_roots_in_field(c, 2, K, opts);
  if (roots.empty()) return std::nullopt;
  for (const auto& b : roots) {
    if (embedding_sign(b) >= 0) return b;
  }
  return roots.front();
}

}  // namespace cubictors
