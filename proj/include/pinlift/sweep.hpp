#pragma once

#include <string>

#include "pinlift/swclass.hpp"

namespace pinlift {

// one evaluated representation with the three independent detection routes
struct SweepRow {
    RepDescriptor rep;
    SpinVerdict verdict;
    CharTriple chars;
    bool char_route = false;  // char_criterion over char_values_for
    bool sw_route = false;    // obstruction_vanishes over (w1, w2)
    Int freudenthal_dim = 0;  // sum of Freudenthal multiplicities
    Int weyl = 0;             // Weyl dimension of the G^0 constituent
};

// every irreducible O(n) descriptor with weight entries <= bound
// (both Type II signs; both rho for odd n; Type I weights once)
std::vector<RepDescriptor> enumerate_descriptors(int n, long bound);

SweepRow evaluate_row(const RepDescriptor& rep);

// serial reference
std::vector<SweepRow> run_sweep_serial(const std::vector<RepDescriptor>& reps);
// OpenMP fan-out; must agree with the serial run exactly
std::vector<SweepRow> run_sweep_parallel(const std::vector<RepDescriptor>& reps);

struct CriterionResult {
    std::string name;
    bool pass = false;
    long checked = 0;
    std::string detail;  // first failure, or a short summary
};

// the built-in validation sweeps; `only` filters by substring of the name
std::vector<CriterionResult> validate(const std::string& only = "");

}  // namespace pinlift
