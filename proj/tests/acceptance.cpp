// One line per acceptance criterion; nonzero exit if any fails.
#include "mpls/verify.hpp"

#include <chrono>
#include <cstdio>

int main() {
    using namespace mpls::verify;
    int failed = 0;
    for (const SuiteInfo& s : suites()) {
        Options o;
        o.seed = 20260101;
        auto t0 = std::chrono::steady_clock::now();
        Report r = run(s.name, o);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        long cases = 0, fails = 0;
        for (const Check& c : r.checks) {
            cases += c.cases;
            fails += c.failures;
        }
        std::printf("%s  criterion %2d  %-12s  %ld cases, %ld failures, %.1fs\n", r.passed() ? "PASS" : "FAIL",
                    s.criterion, s.name.c_str(), cases, fails, secs);
        for (const Check& c : r.checks)
            if (!c.passed()) std::printf("      %s: %s\n", c.name.c_str(), c.first_failure.c_str());
        failed += !r.passed();
    }
    return failed ? 1 : 0;
}
