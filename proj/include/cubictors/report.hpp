#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubictors/families.hpp"
#include "cubictors/obstruction.hpp"

namespace cubictors {

enum class Status { Verified, Excluded, Undecided, Violation };
std::string to_string(Status s);

struct VerificationReport {
  std::string label;
  std::optional<Rational> parameter;
  Status status = Status::Verified;
  std::string reason;  // empty when verified
  std::optional<FamilyMember> member;
  std::optional<TorsionGroup> torsion;           // over the cubic field
  std::optional<TorsionGroup> rational_torsion;  // over Q
  std::optional<FieldClass> field_class;
  std::map<std::string, bool> checks;  // every named identity that was evaluated
  double seconds = 0;
};

struct VerifyOptions {
  RootOptions roots;
  bool timings = false;
};

/// Runs every check attached to the member; never throws for library errors, which are
/// mapped onto EXCLUDED / UNDECIDED / VIOLATION.
VerificationReport verify_member(const FamilyMember& m, const VerifyOptions& opts = {});
/// Builds the member(s) and verifies them. F14_ISOG yields two reports.
std::vector<VerificationReport> verify_family(FamilyId id, const std::optional<Rational>& parameter,
                                              const VerifyOptions& opts = {});
/// One report list per parameter, flattened in input order; jobs > 1 runs parameters in parallel.
std::vector<VerificationReport> verify_sweep(FamilyId id, const std::vector<std::optional<Rational>>& parameters,
                                             const VerifyOptions& opts = {}, int jobs = 1);

struct ObstructionReport {
  HyperCurve curve;
  long H = 0;
  std::vector<HyperPoint> points;
  std::string citation;
  bool matches_expected = false;  // exactly {(0,0), (1,0), inf}
  std::optional<SigmaPhiReport> sigma_phi;
  std::optional<FiberReport> fibers;
  bool ok() const;
};
ObstructionReport run_obstruction(FamilyId id, long H, int jobs = 1);

struct Counts {
  int verified = 0, excluded = 0, undecided = 0, violation = 0;
};
Counts count(const std::vector<VerificationReport>& reports);

nlohmann::ordered_json to_json(const FieldElement& a);
nlohmann::ordered_json to_json(const CurvePoint& P);
nlohmann::ordered_json to_json(const EllipticCurve& E);
nlohmann::ordered_json field_json(const Field& K);
nlohmann::ordered_json to_json(const FieldClass& c);
nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timings);
nlohmann::ordered_json to_json(const Counts& c);
nlohmann::ordered_json to_json(const ObstructionReport& r);

/// Parses {"minpoly": [c0, c1, c2, c3]} (strings or integers, constant term first) or
/// {"minpoly": "x^3+2x^2-x-1"}; null or missing means Q.
Field field_from_json(const nlohmann::json& j);
/// Parses {"a": [a1, a2, a3, a4, a6]} with rational entries (or "ainvs"), or {"A": .., "B": ..}.
EllipticCurve curve_from_json(const nlohmann::json& j);

}  // namespace cubictors
