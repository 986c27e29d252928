#pragma once

#include <string>
#include <vector>

#include "cubictors/report.hpp"

namespace cubictors {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
};
const std::vector<Criterion>& acceptance_criteria();

struct SuiteOptions {
  VerifyOptions verify;
  int jobs = 1;
  long height = 100;
  unsigned seed = 20240607;
};

struct CriterionResult {
  Criterion criterion;
  bool passed = false;  // checks passed and within the time limit
  double seconds = 0;
  std::vector<std::string> failures;
  std::vector<VerificationReport> reports;
  nlohmann::ordered_json data;
};

/// Runs one criterion with its default parameter set. Never throws.
CriterionResult run_criterion(int id, const SuiteOptions& opts = {});
std::vector<CriterionResult> run_suite(const SuiteOptions& opts = {});

nlohmann::ordered_json to_json(const CriterionResult& r, bool with_timings);

/// Default parameter lists of the family sweeps.
std::vector<std::optional<Rational>> default_parameters(FamilyId id);

}  // namespace cubictors
