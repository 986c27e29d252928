#include "cubictors/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "cubictors/errors.hpp"

namespace cubictors {

ObstructionModel obstruction_model(FamilyId id) {
  ObstructionModel m;
  if (id == FamilyId::F14_KUBERT7) {
    m.curve = {"C7", coefficient("C7.h").numerator()};
    m.delta = coefficient("K7.disc").numerator();
    m.m = RationalFunction::parse("u^3(u-1)^3").numerator();
  } else if (id == FamilyId::F18_KUBERT9) {
    m.curve = {"C9", coefficient("C9.h").numerator()};
    m.delta = coefficient("K9.disc").numerator();
    m.m = RationalFunction::parse("u^4(u-1)^4(u^2-u+1)").numerator();
  } else {
    throw InvalidInput("obstruction curves exist only for F14_KUBERT7 and F18_KUBERT9");
  }
  // k = v m / 9, so -27 k^2 = Delta_u reads -27 (m / 9)^2 v^2 = Delta_u.
  const RationalPoly lhs = m.m * m.m * m.curve.h * Rational(Integer(-27), Integer(81));
  if (!(lhs == m.delta)) throw ContractViolation("substitution does not carry -27k^2 = Delta_u to " + m.curve.to_string());
  if (!is_squarefree(m.curve.h)) throw ContractViolation(m.curve.to_string() + " is not squarefree");
  return m;
}

HyperCurve build_obstruction(FamilyId id) { return obstruction_model(id).curve; }

std::string HyperPoint::to_string() const {
  if (infinity) return "inf";
  return "(" + u.to_string() + ", " + v.to_string() + ")";
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpq_class& q = x.value();
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

void search_denominators(const RationalPoly& h, long H, long q_begin, long q_step, std::vector<HyperPoint>& out) {
  for (long q = q_begin; q <= H; q += q_step) {
    for (long p = -H; p <= H; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational u{Integer(p), Integer(q)};
      auto v = rational_sqrt(h(u));
      if (!v) continue;
      out.push_back({false, u, *v});
      if (!v->is_zero()) out.push_back({false, u, -*v});
    }
  }
}

}  // namespace

std::vector<HyperPoint> search_rational_points(const HyperCurve& C, long H, int jobs) {
  if (H < 1) throw InvalidInput("height bound must be at least 1");
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(H)));
  std::vector<std::vector<HyperPoint>> found(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    search_denominators(C.h, H, 1, 1, found[0]);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back(search_denominators, std::cref(C.h), H, 1L + j, static_cast<long>(jobs), std::ref(found[j]));
    for (auto& t : pool) t.join();
  }
  std::vector<HyperPoint> pts;
  for (auto& f : found) pts.insert(pts.end(), f.begin(), f.end());
  std::sort(pts.begin(), pts.end(), [](const HyperPoint& a, const HyperPoint& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  if (C.h.degree() % 2 == 1) pts.push_back({true, Rational(), Rational()});
  return pts;
}

CurveMap CurveMap::then(const CurveMap& next) const { return {next.U.compose(U), V * next.V.compose(U)}; }

bool CurveMap::is_identity() const { return U == RationalFunction::variable() && V == RationalFunction(Rational(1)); }

bool CurveMap::preserves(const RationalPoly& h) const {
  const RationalFunction hf(h);
  return hf.compose(U) == V * V * hf;
}

CurveMap genus3_sigma() {
  return {RationalFunction::parse("(u^4-u^3)/u^4"), RationalFunction::parse("1/u^4")};
}

SigmaPhiReport verify_sigma_and_phi() {
  const RationalPoly h = build_obstruction(FamilyId::F18_KUBERT9).h;
  const RationalFunction hf(h);
  const CurveMap sigma = genus3_sigma();
  const CurveMap iota{RationalFunction::variable(), RationalFunction(Rational(-1))};
  SigmaPhiReport r;
  r.sigma_preserves_curve = sigma.preserves(h);
  r.sigma_not_identity = !sigma.is_identity() && !sigma.then(sigma).is_identity();
  r.sigma_cubed_identity = sigma.then(sigma).then(sigma).is_identity();
  const CurveMap si = sigma.then(iota), is = iota.then(sigma);
  r.sigma_commutes_with_involution = si.U == is.U && si.V == is.V;

  // x = X(u), y = Y(u) v.
  const RationalFunction X = RationalFunction::parse("-(u^3-3u^2+1)/(3u(u-1))");
  const RationalFunction Y = RationalFunction::parse("(u^2-u+1)/(9u^2(u-1)^2)");
  r.phi_lands_on_quotient = (Y * Y * hf - X * X * X - RationalFunction(Rational(1))).is_zero();
  r.phi_sigma_invariant = X.compose(sigma.U) == X && Y.compose(sigma.U) * sigma.V == Y;
  return r;
}

EllipticCurve quotient_curve() { return EllipticCurve::short_form(nullptr, 0, 1); }

std::vector<CurvePoint> quotient_listed_points() {
  auto P = [](long x, long y) { return CurvePoint::affine(x, y); };
  return {CurvePoint::at_infinity(), P(-1, 0), P(0, 1), P(0, -1), P(2, 3), P(2, -3)};
}

bool FiberReport::ok() const {
  if (!(quotient_torsion == TorsionGroup{1, 6}) || !listed_points_exhaust || fibers.size() != 3) return false;
  return std::all_of(fibers.begin(), fibers.end(), [](const Fiber& f) { return f.rational_roots.empty(); });
}

FiberReport fiber_analysis() {
  FiberReport r;
  const TorsionData tors = torsion_points(quotient_curve(), nullptr);
  r.quotient_torsion = tors.group;
  r.quotient_points = tors.points;
  auto listed = quotient_listed_points();
  r.listed_points_exhaust = tors.points.size() == listed.size() &&
                            std::all_of(listed.begin(), listed.end(), [&](const CurvePoint& P) {
                              return std::find(tors.points.begin(), tors.points.end(), P) != tors.points.end();
                            });
  // -(u^3 - 3u^2 + 1) / (3u(u - 1)) = x0  <=>  u^3 - 3u^2 + 1 + 3 x0 u (u - 1) = 0.
  const RationalPoly num = RationalFunction::parse("u^3-3u^2+1").numerator();
  const RationalPoly den = RationalFunction::parse("u(u-1)").numerator();
  for (long x0 : {-1L, 0L, 2L}) {
    Fiber f;
    f.x0 = x0;
    f.cubic = num + den * Rational(3 * x0);
    f.rational_roots = distinct_rational_roots(f.cubic);
    r.fibers.push_back(std::move(f));
  }
  return r;
}

std::string completeness_citation(FamilyId id) {
  if (id == FamilyId::F14_KUBERT7) {
    return "Chabauty method in Magma on the genus-2 curve (Jacobian of rank 0): C(Q) = {(0,0), (1,0), inf}";
  }
  if (id == FamilyId::F18_KUBERT9) {
    return "quotient by an automorphism of order 3 onto y^2 = x^3 + 1 with E(Q) of order 6, "
           "fibers over nontrivial points not rational: C(Q) = {(0,0), (1,0), inf}";
  }
  throw InvalidInput("no obstruction curve for this family");
}

}  // namespace cubictors
