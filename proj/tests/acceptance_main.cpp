// Verification suite: one line per criterion, nonzero exit on any failure.
// The same checks back the CLI's `verify` subcommand; this binary always
// runs them at full depth.

#include <cstdio>

#include "ncmoments/acceptance.hpp"

int main() {
    const auto results = ncmoments::run_acceptance(ncmoments::AcceptanceOptions{});
    int failed = 0;
    for (const auto& r : results) {
        const char* status = r.passed ? (r.skipped ? "SKIP" : "PASS") : "FAIL";
        if (!r.passed) {
            ++failed;
        }
        std::printf("[%s] criterion %2d: %s — %s (%.2fs)\n", status, r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}
