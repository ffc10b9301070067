#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wrightmi {

// One check outcome. status is "pass", "fail", or "erratum-candidate"; the
// last marks a documented finding where the identity as stated disagrees
// with the arbiter checks while the corrected reading passes, reported with
// evidence rather than counted as a failure.
struct VerifyRecord {
    std::string id;
    std::string suite;
    std::string params;
    std::vector<double> grid;
    double max_abs_residual = 0.0;
    double max_rel_residual = 0.0;
    double tolerance = 0.0;
    std::string status;
};

struct VerifyOptions {
    // One of: reductions, eigen, laplace, recurrences, param-derivs,
    // appendix. Empty runs everything.
    std::string suite;
    std::uint64_t seed = 12345;
};

struct VerifyOutcome {
    std::uint64_t seed = 0;
    std::vector<VerifyRecord> records;
    int failures = 0; // count of records with status == "fail"
};

// Runs the selected suites with seeded parameter draws. Deterministic:
// identical options produce identical records. Each suite draws from its
// own stream, so filtering does not change the draws a suite sees.
VerifyOutcome run_verification(const VerifyOptions& options);

} // namespace wrightmi
