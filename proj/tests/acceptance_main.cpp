// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria with a runtime budget fail if they exceed it.

#include <chrono>
#include <cstdio>

#include "causetq/validate.hpp"

namespace {

struct Criterion {
    const char* label;
    causetq::CheckResult (*run)();
    double time_budget_seconds;  // 0 = no budget
};

}  // namespace

int main() {
    using namespace causetq;
    const Criterion criteria[] = {
        {"C1 decomposition and scalar identities", check_decomposition_identities, 1.0},
        {"C2 scalar-candidate audit", check_scalar_audit, 1.0},
        {"C3 pair-transformation invariance", check_transform_invariance, 1.0},
        {"C4 Lorentz/pair commutation", check_lorentz_commutation, 0.0},
        {"C5 oracle coordinate recovery", check_oracle_coordinates, 10.0},
        {"C6 speed recovery and composition", check_speed_recovery, 10.0},
        {"C7 orthogonal decomposition", check_pythagoras, 30.0},
        {"C8 consistency flagging", check_consistency_flagging, 0.0},
        {"C9 poset core correctness", check_poset_core, 0.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const CheckResult result = c.run();
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = c.time_budget_seconds == 0.0 || elapsed <= c.time_budget_seconds;
        const bool pass = result.pass && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] %s (%.2fs): %s%s\n", pass ? "PASS" : "FAIL", c.label, elapsed,
                    result.detail.c_str(), in_budget ? "" : " [over time budget]");
    }
    return failures == 0 ? 0 : 1;
}
