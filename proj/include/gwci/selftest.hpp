#pragma once

#include "gwci/fixtures.hpp"

#include <string>
#include <vector>

namespace gwci::selftest {

struct Check {
    std::string name;
    bool pass = false;
    std::string note;
};

struct Report {
    std::vector<Check> checks;
    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// The numbered acceptance checks. `samples` sizes the randomized suites.
Report criterion(int number, int samples = 100);
Report run_all(int samples = 100);

// Massey table for the pure_powers_b fixture, normalized to this library's
// wedge convention.
MasseyTable pure_powers_b_massey(const GFrame& F, const GroebnerBasis& gbI);

} // namespace gwci::selftest
