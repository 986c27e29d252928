#include "cubictors/report.hpp"

#include <chrono>
#include <thread>

#include "cubictors/errors.hpp"

namespace cubictors {

using nlohmann::ordered_json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "VERIFIED";
    case Status::Excluded: return "EXCLUDED";
    case Status::Undecided: return "UNDECIDED";
    case Status::Violation: return "VIOLATION";
  }
  return "?";
}

namespace {

bool is_rational_square(const Rational& q) {
  return q.sign() >= 0 && mpz_perfect_square_p(q.value().get_num_mpz_t()) &&
         mpz_perfect_square_p(q.value().get_den_mpz_t());
}

void kubert_checks(const FamilyMember& m, const FieldClass& fc, VerificationReport& r) {
  const bool seven = m.label == "F14_KUBERT7";
  const FamilyId id = seven ? FamilyId::F14_KUBERT7 : FamilyId::F18_KUBERT9;
  const Rational& u = *m.parameter;
  const Rational printed = seven ? kubert7_discriminant(u) : kubert9_discriminant(u);
  r.checks["printed_discriminant"] = m.curve.discriminant() == FieldElement(printed);
  const bool in_I = interval_class(id).locate(u) == Interval::I;
  r.checks["interval_rule"] = in_I == (printed.sign() < 0) && in_I == (fc.galois_type == GaloisType::Complex);
  r.checks["never_cyclic"] = fc.galois_type != GaloisType::Cyclic;
}

void f2x14_checks(const FamilyMember& m, const TorsionData& td, const RootOptions& opts, VerificationReport& r) {
  const Rational& u = *m.parameter;
  const EllipticCurve S = family_2x14_short(u);
  auto w = is_isomorphic_over(m.curve, S, nullptr, opts);
  r.checks["long_short_isomorphic"] = w.has_value();
  if (!w) return;
  const CurvePoint* P = nullptr;
  for (const auto& Q : td.points)
    if (point_order(m.curve.over(m.field), Q, 7) == 7L) {
      P = &Q;
      break;
    }
  if (!P) {
    r.checks["bn_normalize_reproduces_long"] = false;
    return;
  }
  const Normalization N = bn_normalize(S.over(m.field), transport(*w, *P));
  r.checks["bn_normalize_reproduces_long"] = is_isomorphic_over(N.curve, m.curve, nullptr, opts).has_value();

  const Printed2x14 printed = family_2x14_printed(u);
  r.checks["printed_point_order_7"] = printed.curve.is_short() && printed.curve.contains(printed.point) &&
                                      point_order(printed.curve, printed.point, 7) == 7L;
  if (r.checks["printed_point_order_7"]) {
    const Normalization Np = bn_normalize(printed.curve, printed.point);
    r.checks["printed_point_normalizes_to_long"] = is_isomorphic_over(Np.curve, m.curve, nullptr, opts).has_value();
  }
}

void fixed14_checks(const FamilyMember& m, const RootOptions& opts, VerificationReport& r) {
  const bool a3 = m.label == "FIXED_49A3";
  r.checks["j_invariant"] = m.curve.j_invariant() == FieldElement(a3 ? -3375 : 16581375);
  const EllipticCurve S = short_model(m.curve).first;
  const EllipticCurve T = quadratic_twist(S, -7);
  r.checks["minus7_twist_torsion_Z2"] = torsion_subgroup(T, m.field, opts) == TorsionGroup{1, 2};
}

void run_checks(const FamilyMember& m, const VerifyOptions& opts, VerificationReport& r) {
  const TorsionData td = torsion_points(m.curve, m.field, opts.roots);
  r.torsion = td.group;
  r.checks["torsion_matches"] = td.group == m.expected_torsion;
  r.checks["torsion_in_najman_list"] = in_najman_list(td.group);
  const TorsionGroup tq = torsion_subgroup(m.curve, nullptr, opts.roots);
  r.rational_torsion = tq;
  r.checks["rational_torsion_in_mazur_list"] = in_mazur_list(tq);
  r.checks["rational_torsion_divides"] = divides(tq, td.group);
  if (m.expected_rational_torsion) r.checks["rational_torsion_matches"] = tq == *m.expected_rational_torsion;

  const FieldClass fc = classify(*m.field);
  r.field_class = fc;
  r.checks["galois_type_matches"] = fc.galois_type == m.expected_class.galois_type;
  r.checks["pure_candidate_matches"] = fc.pure_candidate == m.expected_class.pure_candidate;
  if (m.expected_class.galois_type == GaloisType::Cyclic) {
    r.checks["field_disc_square"] = is_rational_square(m.field->disc());
  }

  if (m.label == "F13") {
    const Rational& u = *m.parameter;
    const EllipticCurve twisted = isogeny13_model(u, twist13_U(u));
    r.checks["isogeny_model_twist"] = twisted == m.curve;
    r.checks["twist_identity"] = verify_twist13_identity(u);
  } else if (m.label == "F14_KUBERT7" || m.label == "F18_KUBERT9") {
    kubert_checks(m, fc, r);
  } else if (m.label == "F18_CYCLIC") {
    const EllipticCurve Es = curve_with_rational_3torsion(s_of_u(*m.parameter));
    r.checks["s_substitution_isomorphic"] = is_isomorphic_over(Es, m.curve, nullptr, opts.roots).has_value();
  } else if (m.label == "F2x14") {
    f2x14_checks(m, td, opts.roots, r);
  } else if (m.label == "FIXED_49A3" || m.label == "FIXED_49A4") {
    fixed14_checks(m, opts.roots, r);
  }
}

void settle(VerificationReport& r) {
  std::string failed;
  for (const auto& [name, ok] : r.checks)
    if (!ok) failed += (failed.empty() ? "" : ", ") + name;
  if (failed.empty()) {
    r.status = Status::Verified;
  } else {
    r.status = Status::Violation;
    r.reason = "failed: " + failed;
  }
}

template <class F>
void guarded(VerificationReport& r, F&& body) {
  try {
    body();
  } catch (const Excluded& e) {
    r.status = Status::Excluded;
    r.reason = e.what();
  } catch (const Undecided& e) {
    r.status = Status::Undecided;
    r.reason = e.what();
  } catch (const std::exception& e) {
    r.status = Status::Violation;
    r.reason = e.what();
  }
}

}  // namespace

VerificationReport verify_member(const FamilyMember& m, const VerifyOptions& opts) {
  VerificationReport r;
  r.label = m.label;
  r.parameter = m.parameter;
  r.member = m;
  const auto t0 = std::chrono::steady_clock::now();
  guarded(r, [&] {
    run_checks(m, opts, r);
    settle(r);
  });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<VerificationReport> verify_family(FamilyId id, const std::optional<Rational>& parameter,
                                              const VerifyOptions& opts) {
  std::vector<FamilyMember> members;
  VerificationReport failed;
  failed.label = to_string(id);
  failed.parameter = parameter;
  failed.status = Status::Verified;
  guarded(failed, [&] { members = make_members(id, parameter); });
  if (failed.status != Status::Verified) return {failed};
  std::vector<VerificationReport> out;
  for (const auto& m : members) out.push_back(verify_member(m, opts));
  return out;
}

std::vector<VerificationReport> verify_sweep(FamilyId id, const std::vector<std::optional<Rational>>& parameters,
                                             const VerifyOptions& opts, int jobs) {
  std::vector<std::vector<VerificationReport>> slots(parameters.size());
  if (jobs <= 1 || parameters.size() <= 1) {
    for (std::size_t i = 0; i < parameters.size(); ++i) slots[i] = verify_family(id, parameters[i], opts);
  } else {
    std::vector<std::thread> pool;
    const std::size_t n = std::min(parameters.size(), static_cast<std::size_t>(jobs));
    for (std::size_t w = 0; w < n; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < parameters.size(); i += n) slots[i] = verify_family(id, parameters[i], opts);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<VerificationReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

bool ObstructionReport::ok() const {
  if (!matches_expected) return false;
  if (sigma_phi && !sigma_phi->ok()) return false;
  if (fibers && !fibers->ok()) return false;
  return true;
}

ObstructionReport run_obstruction(FamilyId id, long H, int jobs) {
  ObstructionReport r;
  r.curve = build_obstruction(id);
  r.H = H;
  r.points = search_rational_points(r.curve, H, jobs);
  r.citation = completeness_citation(id);
  const std::vector<HyperPoint> expected{{false, Rational(0), Rational(0)}, {false, Rational(1), Rational(0)},
                                         {true, Rational(), Rational()}};
  r.matches_expected = r.points == expected;
  if (id == FamilyId::F18_KUBERT9) {
    r.sigma_phi = verify_sigma_and_phi();
    r.fibers = fiber_analysis();
  }
  return r;
}

Counts count(const std::vector<VerificationReport>& reports) {
  Counts c;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Verified: ++c.verified; break;
      case Status::Excluded: ++c.excluded; break;
      case Status::Undecided: ++c.undecided; break;
      case Status::Violation: ++c.violation; break;
    }
  }
  return c;
}

// ---- JSON ----

ordered_json to_json(const FieldElement& a) { return a.to_string(); }

ordered_json to_json(const CurvePoint& P) {
  if (P.infinity) return "O";
  return ordered_json::array({to_json(P.x), to_json(P.y)});
}

ordered_json to_json(const EllipticCurve& E) {
  ordered_json a = ordered_json::array();
  for (const auto& c : E.a()) a.push_back(to_json(c));
  ordered_json j;
  j["a"] = a;
  j["field"] = field_json(E.field());
  j["j_invariant"] = to_json(E.j_invariant());
  return j;
}

ordered_json field_json(const Field& K) {
  if (!K) return "Q";
  ordered_json c = ordered_json::array();
  for (const auto& q : K->minpoly().coefficients()) c.push_back(q.to_string());
  ordered_json j;
  j["minpoly"] = K->minpoly().to_string("x");
  j["coefficients"] = c;
  j["disc"] = K->disc().to_string();
  return j;
}

ordered_json to_json(const FieldClass& c) {
  ordered_json j;
  j["galois_type"] = to_string(c.galois_type);
  j["pure_candidate"] = c.pure_candidate;
  return j;
}

ordered_json to_json(const VerificationReport& r, bool with_timings) {
  ordered_json j;
  j["family"] = r.label;
  j["parameter"] = r.parameter ? ordered_json(r.parameter->to_string()) : ordered_json(nullptr);
  j["status"] = to_string(r.status);
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.member) {
    j["curve"] = to_json(r.member->curve);
    j["field"] = field_json(r.member->field);
    j["expected_torsion"] = r.member->expected_torsion.to_string();
    j["expected_class"] = to_json(r.member->expected_class);
    if (r.member->expected_rational_torsion) {
      j["expected_rational_torsion"] = r.member->expected_rational_torsion->to_string();
    }
  }
  if (r.torsion) j["torsion"] = r.torsion->to_string();
  if (r.rational_torsion) j["rational_torsion"] = r.rational_torsion->to_string();
  if (r.field_class) j["field_class"] = to_json(*r.field_class);
  if (!r.checks.empty()) {
    ordered_json c;
    for (const auto& [k, v] : r.checks) c[k] = v;
    j["checks"] = c;
  }
  if (with_timings) j["seconds"] = r.seconds;
  return j;
}

ordered_json to_json(const Counts& c) {
  ordered_json j;
  j["verified"] = c.verified;
  j["excluded"] = c.excluded;
  j["undecided"] = c.undecided;
  j["violation"] = c.violation;
  return j;
}

ordered_json to_json(const ObstructionReport& r) {
  ordered_json j;
  j["curve"] = r.curve.to_string();
  j["genus"] = r.curve.genus();
  j["H"] = r.H;
  ordered_json pts = ordered_json::array();
  for (const auto& p : r.points) pts.push_back(p.to_string());
  j["points_found"] = pts;
  j["consistent_up_to_height"] = r.matches_expected;
  j["external_completeness_citation"] = r.citation;
  if (r.sigma_phi) {
    const auto& s = *r.sigma_phi;
    j["sigma_phi"] = {{"sigma_preserves_curve", s.sigma_preserves_curve},
                      {"sigma_order_3", s.sigma_not_identity && s.sigma_cubed_identity},
                      {"sigma_commutes_with_involution", s.sigma_commutes_with_involution},
                      {"phi_lands_on_y2_x3_1", s.phi_lands_on_quotient},
                      {"phi_sigma_invariant", s.phi_sigma_invariant}};
  }
  if (r.fibers) {
    ordered_json f;
    f["quotient_torsion"] = r.fibers->quotient_torsion.to_string();
    f["listed_points_exhaust"] = r.fibers->listed_points_exhaust;
    ordered_json fl = ordered_json::array();
    for (const auto& fb : r.fibers->fibers) {
      ordered_json roots = ordered_json::array();
      for (const auto& q : fb.rational_roots) roots.push_back(q.to_string());
      fl.push_back({{"x0", fb.x0.to_string()}, {"cubic", fb.cubic.to_string("u")}, {"rational_roots", roots}});
    }
    f["fibers"] = fl;
    j["fiber_analysis"] = f;
  }
  j["ok"] = r.ok();
  return j;
}

namespace {

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw InvalidInput("expected a rational (integer or string), got " + v.dump());
}

}  // namespace

Field field_from_json(const nlohmann::json& j) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "Q")) return nullptr;
  const nlohmann::json& mp = j.is_object() ? j.at("minpoly") : j;
  RationalPoly f;
  if (mp.is_string()) {
    RationalFunction g = RationalFunction::parse(mp.get<std::string>(), "x");
    if (!g.is_polynomial()) throw InvalidInput("minpoly must be a polynomial");
    f = g.numerator();
  } else if (mp.is_array()) {
    std::vector<Rational> c;
    for (const auto& v : mp) c.push_back(rational_from_json(v));
    f = RationalPoly(std::move(c));
  } else {
    throw InvalidInput("field needs a minpoly string or coefficient list");
  }
  return CubicField::create(f);
}

EllipticCurve curve_from_json(const nlohmann::json& j) {
  auto get = [&](const char* key) -> const nlohmann::json* { return j.contains(key) ? &j.at(key) : nullptr; };
  if (j.is_array()) return curve_from_json(nlohmann::json{{"a", j}});
  if (const auto* a = get("a") ? get("a") : get("ainvs")) {
    if (!a->is_array() || a->size() != 5) throw InvalidInput("curve needs five coefficients a1, a2, a3, a4, a6");
    std::array<FieldElement, 5> c;
    for (std::size_t i = 0; i < 5; ++i) c[i] = rational_from_json((*a)[i]);
    return EllipticCurve(nullptr, c);
  }
  if (get("A") && get("B")) return EllipticCurve::short_form(nullptr, rational_from_json(j["A"]), rational_from_json(j["B"]));
  throw InvalidInput("curve JSON needs \"a\": [a1, a2, a3, a4, a6] or \"A\" and \"B\"");
}

}  // namespace cubictors
