#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

namespace hhb {

struct CheckResult {
    std::string name;
    bool passed = true;
    double worst_residual = 0.0;
    double threshold = 0.0;
    std::size_t cases = 0;
    std::string detail;
};

struct VerifySummary {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
};

inline constexpr double kDefaultVerifyTol = 1e-9;

/// Admissible (a, b, m) triples on [0, 2] with m ∈ {0.4, 0.7, 1.0} used for
/// the trapezoid identity.
std::vector<std::tuple<double, double, double>> identity_configs();

/// Runs the special-function and bound identity/inequality checks over the
/// built-in corpus. Each check passes when its worst residual is at most
/// min(own threshold, tol); failures are reported, never thrown.
VerifySummary verify_identities(double tol = kDefaultVerifyTol);

} // namespace hhb
