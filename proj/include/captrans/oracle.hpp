#pragma once

#include <cstdint>

#include "captrans/lp.hpp"
#include "captrans/setfun.hpp"

namespace captrans {

// Result of exhaustive vertex enumeration. Status is Optimal or Infeasible;
// unboundedness cannot arise in the bounded-below programs this is used on.
struct EnumerationResult {
    LPStatus status = LPStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> witness;  // per original variable, empty unless Optimal
    std::uint64_t bases_examined = 0;
    std::uint64_t feasible_count = 0;
    int basis_size = 0;  // rank of the equality system
};

// Brute-force optimum: converts to equality form, reduces to a full-rank
// system, then solves every possible basis by Gaussian elimination, keeping
// candidates that satisfy the original constraints within kTol. Caps: at
// most 20 variables after slack conversion and 16 rows (TooLarge beyond).
EnumerationResult enumerate_optimum(const LinearProgram& lp);

struct TransformCheck {
    double max_mobius_diff = 0.0;
    double max_maxplus_diff = 0.0;
};

// Recomputes both transforms by their literal definitional sums and maxima
// (no shared code with the fast versions) and diffs the results.
TransformCheck direct_transform_check(const Capacity& mu);

}  // namespace captrans
