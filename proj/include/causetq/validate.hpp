#ifndef CAUSETQ_VALIDATE_HPP
#define CAUSETQ_VALIDATE_HPP

#include <optional>
#include <string>
#include <vector>

namespace causetq {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The verification suites, one per acceptance-facing property group. Each
/// runs deterministic seeded inputs and pins its thresholds internally.
CheckResult check_decomposition_identities();  // exact reconstruction + scalar identities
CheckResult check_scalar_audit();              // candidate filters and survivors
CheckResult check_transform_invariance();      // sigma^2 scaling + lightlike preservation
CheckResult check_lorentz_commutation();       // pair route vs coordinate route
CheckResult check_oracle_coordinates();        // discrete vs continuum radar coordinates
CheckResult check_speed_recovery();            // measured beta and velocity composition
CheckResult check_pythagoras();                // orthogonal decomposition, both routes
CheckResult check_consistency_flagging();      // bounding vs non-bounding frames
CheckResult check_poset_core();                // closure and projection vs brute force

/// All suites in acceptance order; pass a name to run a single one.
std::vector<CheckResult> run_checks(const std::optional<std::string>& only = std::nullopt);

std::vector<std::string> check_names();

}  // namespace causetq

#endif
