#include <cstdio>

#include "cubictors/suite.hpp"

using namespace cubictors;

int main() {
  int failed = 0;
  for (const Criterion& c : acceptance_criteria()) {
    const CriterionResult r = run_criterion(c.id);
    std::printf("%s [%d] %s (%.1fs, limit %.0fs)\n", r.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), r.seconds,
                c.limit_seconds);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(acceptance_criteria().size()) - failed,
              acceptance_criteria().size());
  return failed == 0 ? 0 : 1;
}
