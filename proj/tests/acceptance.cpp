#include <cstdio>

#include "cyc/suites.hpp"

using namespace cyc;

int main() {
    // seconds allowed per criterion
    const double budget[] = {1, 5, 10, 10, 30, 30, 10, 10, 1, 20, 20, 20, 20, 10};
    SuiteOptions opt;
    int bad = 0;
    double total = 0;
    for (int id = 1; id <= 14; ++id) {
        CriterionResult r = run_criterion(id, opt);
        const bool in_time = r.seconds < budget[id - 1];
        const bool pass = r.ok() && in_time;
        bad += !pass;
        total += r.seconds;
        std::printf("criterion %2d: %s  %s (%zu cases, %d failed, %.2f s of %.0f s)\n", id, pass ? "PASS" : "FAIL", r.title.c_str(),
                    r.cases.size(), r.failures(), r.seconds, budget[id - 1]);
        for (const auto& c : r.cases)
            if (!c.ok) std::printf("    failed: %s\n", c.key.c_str());
        std::fflush(stdout);
    }
    std::printf("total %.1f s\n", total);
    return bad ? 1 : 0;
}
