#include <doctest.h>

#include "cubemob/audit.hpp"

using namespace cubemob;

// The aggregated audit is the union of every cross-check at its stated
// range: exhaustive dimensions 1..3, randomized/sampled work at 4. The
// only expected findings are the two printed-value anomalies.
TEST_CASE("full audit up to n = 4") {
  AuditOptions options;
  options.jobs = 2;
  auto report = run_audit(4, options);
  for (const auto& check : report.checks) CHECK_MESSAGE(check.pass, check.name, ": ", check.detail);
  CHECK(report.all_pass);

  int printed_mu = 0, printed_recurrence = 0;
  for (const auto& d : report.discrepancies) {
    if (d.check == "impl.mu_top_printed_value") ++printed_mu;
    if (d.check == "mobius.mr_recurrence_printed") ++printed_recurrence;
  }
  CHECK(printed_mu == 2);  // odd dimensions 1 and 3
  CHECK(printed_recurrence == 4);
  CHECK(report.discrepancies.size() == 6);
}
