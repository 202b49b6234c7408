// Acceptance suite runner: one pass/fail line per criterion.

#include <cstdio>

#include "gstwalk/golden.hpp"

int main() {
    const auto results = gstwalk::run_golden();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %d: %s%s%s\n", r.passed ? "PASS" : "FAIL", r.index,
                    r.name.c_str(), r.detail.empty() ? "" : "  -- ", r.detail.c_str());
        if (!r.passed) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
