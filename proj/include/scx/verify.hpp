#pragma once

#include <string>
#include <vector>

namespace scx {

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckLine> checks;

    bool all_passed() const {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
};

/// Recomputes the built-in reference complexes and their invariants from
/// scratch: top spectral radii, facet counts, top homology ranks, the
/// exact-extension condition, absence of full simplex boundaries, and the
/// exact face-count ceilings with their floors. Sixteen checks total.
VerificationReport verify_known_cases();

} // namespace scx
