#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "slicereg/rng.hpp"

namespace slicereg {

/// Configuration of a verification run. `samples` multiplies every suite's
/// case count; `tol_overrides` replaces a suite's tolerance by name.
struct RunConfig {
    std::uint64_t seed = 20240801;
    unsigned samples = 1;
    int quadrature_n = 256;
    std::map<std::string, double> tol_overrides;
    std::vector<std::string> only;  // run just these suites when nonempty

    void validate() const;
};

struct SuiteResult {
    std::string name;
    long cases = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

struct SuiteOutcome {
    double max_residual = 0.0;
    long cases = 0;
};

struct SuiteSpec {
    std::string name;
    double default_tol;
    std::function<SuiteOutcome(Rng&, const RunConfig&)> run;
};

/// The registry: one entry per invariant suite, each with a single
/// headline tolerance (overridable via --tol.<name>).
const std::vector<SuiteSpec>& verification_suites();

std::vector<SuiteResult> run_verification(const RunConfig& config);

bool all_passed(const std::vector<SuiteResult>& results);

/// Deterministic report (no timings); timings go to a separate stream.
std::string format_report_text(const std::vector<SuiteResult>& results);
std::string format_report_json(const std::vector<SuiteResult>& results);

}  // namespace slicereg
