#pragma once

#include <string>
#include <vector>

namespace circumnav::verification {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full certification suite over the shipped scenarios: baseline
/// reproduction, decay-rate fits, Lyapunov monotonicity, the Dhat floor,
/// skew/orthogonality of both schedule constructions, positive and negative
/// persistence certification, the 3-D schedule, drift, noise, the
/// constant-speed variant, and the integrator order check. Every tolerance
/// is fixed here.
std::vector<CheckResult> run_all();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace circumnav::verification
