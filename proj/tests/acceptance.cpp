// Acceptance suite: every verification criterion at its pinned tolerance,
// one line per criterion. Exit code 0 iff everything passes.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "slicereg/verify.hpp"

namespace {

struct Criterion {
    int number;
    const char* label;
    std::vector<std::string> suites;
    double budget_seconds;
};

}  // namespace

int main() {
    using namespace slicereg;

    const std::vector<Criterion> criteria = {
        {1, "round-trip identities P.Q and Q.P", {"series-roundtrip"}, 5.0},
        {2, "representation formula consistency", {"series-representation"}, 2.0},
        {3, "conjugate-harmonic correctness", {"harmonic-conjugate"}, 2.0},
        {4, "quaternionic Schwarz reconstruction",
         {"harmonic-schwarz-coeffs", "harmonic-schwarz-eval"}, 5.0},
        {5, "bundle identities", {"bundle-identities"}, 10.0},
        {6, "zero-data bundle round trip", {"zero-bundle"}, 10.0},
        {7, "Gauss-Lucas and morphism diagram", {"gauss-lucas"}, 10.0},
        {8, "oracle equivalences", {"oracle-hull", "oracle-derivative", "oracle-roots"}, 5.0},
    };

    RunConfig cfg;
    for (const auto& c : criteria)
        for (const auto& s : c.suites) cfg.only.push_back(s);

    const std::vector<SuiteResult> results = run_verification(cfg);
    std::map<std::string, const SuiteResult*> by_name;
    for (const auto& r : results) by_name[r.name] = &r;

    bool all_ok = true;
    double total_seconds = 0.0;
    for (const auto& c : criteria) {
        bool pass = true;
        double worst = 0.0, tol = 0.0, seconds = 0.0;
        for (const auto& s : c.suites) {
            const SuiteResult* r = by_name.at(s);
            pass = pass && r->pass;
            seconds += r->seconds;
            if (r->tolerance > 0.0 && (tol == 0.0 || r->max_residual / r->tolerance > worst / tol)) {
                worst = r->max_residual;
                tol = r->tolerance;
            } else if (r->tolerance == 0.0 && r->max_residual > 0.0) {
                pass = false;
            }
        }
        pass = pass && seconds < c.budget_seconds;
        total_seconds += seconds;
        all_ok = all_ok && pass;
        std::printf("criterion %d  %-40s %s  max %.3e  tol %.1e  %.2fs\n", c.number, c.label,
                    pass ? "PASS" : "FAIL", worst, tol, seconds);
    }
    std::printf("acceptance: %s  (total %.2fs, budget 60s)\n",
                (all_ok && total_seconds < 60.0) ? "PASS" : "FAIL", total_seconds);
    return (all_ok && total_seconds < 60.0) ? 0 : 1;
}
