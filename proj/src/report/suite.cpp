#include "cubictors/suite.hpp"

#include <chrono>
#include <mutex>
#include <random>
#include <set>

#include "cubictors/errors.hpp"

namespace cubictors {

using nlohmann::ordered_json;

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list{
      {1, "F13 sweep: Z/13 over cyclic cubic fields", 60},
      {2, "twist identity for the 13-isogeny family", 5},
      {3, "49A3 and 49A4: Z/2 over Q, Z/14 over Q(zeta7)+, -7 twists Z/2, j-invariants", 10},
      {4, "modular map X1(14) -> X0(14) on Q1, Q2", 1},
      {5, "F14_KUBERT7 sweep: Z/14 over K_u, Z/7 over Q, interval rule, no pure fields", 60},
      {6, "9-isogeny checks: linear 3-division factor, disc(F_s), t = 0 singular", 5},
      {7, "F18_CYCLIC sweep: Z/18 over cyclic K_u, Z/6 over Q", 120},
      {8, "F18_KUBERT9 sweep: Z/18 over K_u, Z/9 over Q, interval rule, no pure fields", 120},
      {9, "F2x14 sweep: Z/2 x Z/14 over cyclic K_u, long = short, BN normalization", 120},
      {10, "obstruction curves, sigma and phi, fibers over y^2 = x^3 + 1", 30},
      {11, "torsion lists, division polynomials vs group law, square roots", 60},
  };
  return list;
}

std::vector<std::optional<Rational>> default_parameters(FamilyId id) {
  auto R = [](const char* s) { return std::optional<Rational>(Rational::parse(s)); };
  switch (id) {
    case FamilyId::F13: return {R("2"), R("3"), R("1/2"), R("-2"), R("5/3")};
    case FamilyId::F14_KUBERT7: return {R("2"), R("3"), R("-1"), R("1/3"), R("7"), R("8")};
    case FamilyId::F18_CYCLIC: return {R("2"), R("-1"), R("4"), R("1/2"), R("-2")};
    case FamilyId::F18_KUBERT9: return {R("2"), R("3"), R("-1"), R("6")};
    case FamilyId::F2x14: return {R("2"), R("3"), R("1/2"), R("-2")};
    default: return {std::nullopt};
  }
}

namespace {

// Torsion groups computed by earlier criteria in the same process, for the list checks of 11.
struct Seen {
  std::mutex mu;
  std::vector<TorsionGroup> over_k;
  std::vector<TorsionGroup> over_q;
};
Seen& seen() {
  static Seen s;
  return s;
}

void remember(const std::vector<VerificationReport>& reports) {
  std::lock_guard lock(seen().mu);
  for (const auto& r : reports) {
    if (r.torsion) seen().over_k.push_back(*r.torsion);
    if (r.rational_torsion) seen().over_q.push_back(*r.rational_torsion);
  }
}

struct Ctx {
  CriterionResult& out;
  void expect(bool ok, const std::string& what) {
    if (!ok) out.failures.push_back(what);
  }
};

void sweep(FamilyId id, const SuiteOptions& opts, Ctx& c, bool allow_excluded) {
  auto reports = verify_sweep(id, default_parameters(id), opts.verify, opts.jobs);
  remember(reports);
  int verified = 0;
  for (const auto& r : reports) {
    const std::string who = r.label + (r.parameter ? " u=" + r.parameter->to_string() : "");
    if (r.status == Status::Verified) {
      ++verified;
    } else if (!(allow_excluded && r.status == Status::Excluded)) {
      c.expect(false, who + ": " + to_string(r.status) + " " + r.reason);
    }
  }
  c.expect(verified > 0, "no member verified");
  c.out.reports = std::move(reports);
}

void criterion_2(Ctx& c) {
  ordered_json d = ordered_json::object();
  for (const char* t : {"2", "3", "-1", "1/2"}) {
    const Twist13Check chk = check_twist13_identity(Rational::parse(t));
    d[t] = {{"beta_squared", chk.beta_squared}, {"twist", chk.twist}};
    c.expect(chk.holds(), std::string("twist identity fails at t = ") + t);
  }
  c.out.data = d;
}

void criterion_4(Ctx& c) {
  const Field K = zeta7_plus_field();
  const FieldElement a = FieldElement::generator(K);
  const FieldElement one(1);
  struct Case {
    const char* name;
    FieldElement x, y;
    long u, v;
  };
  const Case cases[] = {
      {"Q1", one - a - a * a, a, -2, 3},
      {"Q2", FieldElement(-3) + FieldElement(2) * a + FieldElement(2) * a * a, one - FieldElement(2) * a * a, -9, -25},
  };
  ordered_json d = ordered_json::object();
  for (const auto& k : cases) {
    auto [u, v] = eval_phi(k.x, k.y);
    const bool hit = u == FieldElement(k.u) && v == FieldElement(k.v);
    const bool on_x0 = Modular14::x0_equation(FieldElement(k.u), FieldElement(k.v)).is_zero();
    d[k.name] = {{"phi", {u.to_string(), v.to_string()}}, {"matches", hit}, {"on_X0_14", on_x0}};
    c.expect(hit, std::string("phi(") + k.name + ") = (" + u.to_string() + ", " + v.to_string() + ")");
    c.expect(on_x0, std::string("image of ") + k.name + " is not on X0(14)");
  }
  c.out.data = d;
}

void criterion_6(Ctx& c) {
  const EllipticCurve E1 = isogeny9_model(1, 1);
  const RationalPoly psi3 = division_polynomial(E1, 3);
  const RationalPoly lin = three_torsion_linear_factor(1);
  c.expect(psi3(Rational(-648)).is_zero(), "x = -648 is not a root of psi_3 at t = 1");
  c.expect(lin == RationalPoly({648, 1}), "linear factor at t = 1 is " + lin.to_string());
  c.expect(divides(lin, psi3), "linear factor does not divide psi_3 at t = 1");
  ordered_json d = ordered_json::object();
  for (const char* s : {"0", "1", "-2", "1/2"}) {
    const Rational sv = Rational::parse(s);
    const Rational disc = discriminant(cubic_factor_F(sv));
    const Rational formula = cubic_factor_F_disc_formula(sv);
    d[std::string("disc_F_") + s] = disc.to_string();
    c.expect(disc == formula, std::string("disc(F_s) mismatch at s = ") + s);
  }
  c.expect(discriminant(cubic_factor_F(0)) == Rational(2985984), "disc(F_0) != 2985984");
  bool rejected = false;
  try {
    isogeny9_model(0, 1);
  } catch (const Excluded&) {
    rejected = true;
  }
  c.expect(rejected, "t = 0 was not rejected as singular");
  d["t0_rejected"] = rejected;
  c.out.data = d;
}

void criterion_10(const SuiteOptions& opts, Ctx& c) {
  ordered_json d = ordered_json::object();
  for (FamilyId id : {FamilyId::F14_KUBERT7, FamilyId::F18_KUBERT9}) {
    const ObstructionReport r = run_obstruction(id, opts.height, opts.jobs);
    d[to_string(id)] = to_json(r);
    c.expect(r.matches_expected, to_string(id) + ": points up to height differ from {(0,0), (1,0), inf}");
    if (r.sigma_phi) c.expect(r.sigma_phi->ok(), "sigma / phi identities fail");
    if (r.fibers) c.expect(r.fibers->ok(), "fiber analysis fails");
  }
  c.out.data = d;
}

void criterion_11(const SuiteOptions& opts, Ctx& c) {
  std::mt19937 rng(opts.seed);
  ordered_json d = ordered_json::object();

  // Torsion lists: random curves over Q, a few over Q(zeta7)+, and whatever earlier criteria computed.
  std::uniform_int_distribution<int> coeff(-30, 30);
  int q_curves = 0, k_curves = 0;
  for (int i = 0; q_curves < 40 && i < 200; ++i) {
    try {
      const EllipticCurve E(nullptr, {coeff(rng) % 2, coeff(rng) % 3, coeff(rng) % 2, coeff(rng), coeff(rng)});
      const TorsionGroup g = torsion_subgroup(E, nullptr, opts.verify.roots);
      c.expect(in_mazur_list(g), "torsion over Q outside Mazur's list: " + g.to_string());
      ++q_curves;
      if (k_curves < 4) {
        const TorsionGroup h = torsion_subgroup(E, zeta7_plus_field(), opts.verify.roots);
        c.expect(in_najman_list(h), "torsion over a cubic field outside Najman's list: " + h.to_string());
        c.expect(divides(g, h), "torsion over Q does not divide torsion over K");
        ++k_curves;
      }
    } catch (const SingularCurve&) {
    }
  }
  {
    std::lock_guard lock(seen().mu);
    for (const auto& g : seen().over_k) c.expect(in_najman_list(g), "family torsion outside Najman's list");
    for (const auto& g : seen().over_q) c.expect(in_mazur_list(g), "family torsion over Q outside Mazur's list");
    d["family_groups_checked"] = seen().over_k.size() + seen().over_q.size();
  }
  d["random_curves_over_Q"] = q_curves;
  d["random_curves_over_K"] = k_curves;

  // psi_n roots against the group law.
  struct Case {
    std::string name;
    EllipticCurve S;
    Field K;
  };
  std::vector<Case> cases{{"y^2 = x^3 + 1", quotient_curve(), nullptr},
                          {"49A3", short_model(curve_49a3()).first, zeta7_plus_field()}};
  for (const auto& k : cases) {
    const TorsionData td = torsion_points(k.S, k.K, opts.verify.roots);
    for (int n = 1; n <= 9; ++n) {
      const RationalPoly psi = division_polynomial(k.S, n);
      std::set<std::array<Rational, 3>> expected, found;
      for (const auto& P : td.points)
        if (!P.infinity && point_mul(k.S.over(k.K), n, P).infinity) expected.insert(P.x.in(k.K).coords());
      for (const auto& x : roots_in_field(psi, k.K, opts.verify.roots)) {
        const FieldElement rhs = (x * x + k.S.a4()) * x + k.S.a6();
        if (rhs.is_zero() || sqrt_in_field(rhs, k.K, opts.verify.roots)) found.insert(x.coords());
      }
      c.expect(found == expected, k.name + ": psi_" + std::to_string(n) + " roots differ from the group law");
    }
  }

  // sqrt_in_field(c^2) is +-c.
  const Field fields[] = {zeta7_plus_field(), CubicField::create(RationalPoly({-2, 0, 0, 1})),
                          CubicField::create(RationalPoly({-1, -1, 0, 1}))};
  std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
  for (int i = 0; i < 200; ++i) {
    const Field& K = fields[i % 3];
    const FieldElement e(K, {Rational(Integer(num(rng)), Integer(den(rng))), Rational(Integer(num(rng)), Integer(den(rng))),
                             Rational(Integer(num(rng)), Integer(den(rng)))});
    auto r = sqrt_in_field(e * e, K, opts.verify.roots);
    c.expect(r && (*r == e || *r == -e), "sqrt_in_field(c^2) is not +-c for c = " + e.to_string());
  }
  d["sqrt_samples"] = 200;
  c.out.data = d;
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
  CriterionResult out;
  const auto& list = acceptance_criteria();
  if (id < 1 || id > static_cast<int>(list.size())) {
    out.criterion = {id, "unknown criterion", 0};
    out.failures.push_back("no such criterion");
    return out;
  }
  out.criterion = list[static_cast<std::size_t>(id - 1)];
  Ctx c{out};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: sweep(FamilyId::F13, opts, c, true); break;
      case 2: criterion_2(c); break;
      case 3: sweep(FamilyId::F14_ISOG, opts, c, false); break;
      case 4: criterion_4(c); break;
      case 5: sweep(FamilyId::F14_KUBERT7, opts, c, false); break;
      case 6: criterion_6(c); break;
      case 7: sweep(FamilyId::F18_CYCLIC, opts, c, false); break;
      case 8: sweep(FamilyId::F18_KUBERT9, opts, c, false); break;
      case 9: sweep(FamilyId::F2x14, opts, c, false); break;
      case 10: criterion_10(opts, c); break;
      case 11: criterion_11(opts, c); break;
    }
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("error: ") + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.seconds > out.criterion.limit_seconds) {
    out.failures.push_back("time limit " + std::to_string(static_cast<int>(out.criterion.limit_seconds)) +
                           " s exceeded");
  }
  out.passed = out.failures.empty();
  return out;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) out.push_back(run_criterion(c.id, opts));
  return out;
}

ordered_json to_json(const CriterionResult& r, bool with_timings) {
  ordered_json j;
  j["criterion"] = r.criterion.id;
  j["title"] = r.criterion.title;
  j["result"] = r.passed ? "PASS" : "FAIL";
  j["time_limit_seconds"] = r.criterion.limit_seconds;
  if (with_timings) j["seconds"] = r.seconds;
  if (!r.failures.empty()) j["failures"] = r.failures;
  if (!r.reports.empty()) {
    ordered_json reps = ordered_json::array();
    for (const auto& rep : r.reports) reps.push_back(to_json(rep, with_timings));
    j["reports"] = reps;
  }
  if (!r.data.is_null()) j["data"] = r.data;
  return j;
}

}  // namespace cubictors
