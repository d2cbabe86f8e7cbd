#pragma once

#include <string>
#include <vector>

#include "captrans/errors.hpp"

namespace captrans {

enum class Relation { Equal, LessEqual };

enum class LPStatus { Optimal, Infeasible, Unbounded, IterationLimit };

const char* to_string(LPStatus s);

// Minimization problem over nonnegative variables:
//   min c.x  s.t.  each row is sum(coeffs.x) (= | <=) rhs,  x >= 0.
// Free (sign-unrestricted) variables are handled one level up by
// rewrite_absolute, which also linearizes |x| objectives.
struct LinearProgram {
    std::vector<std::string> names;
    std::vector<double> objective;
    struct Row {
        std::vector<double> coeffs;  // dense, one per variable
        Relation rel = Relation::Equal;
        double rhs = 0.0;
    };
    std::vector<Row> rows;

    int variable_count() const { return static_cast<int>(objective.size()); }
    int add_variable(std::string name, double objective_weight = 0.0);
    void add_constraint(std::vector<double> coeffs, Relation rel, double rhs);
};

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    std::vector<double> values;  // per original variable; empty unless Optimal
    double objective = 0.0;
    long iterations = 0;
};

inline constexpr long kDefaultIterationLimit = 1'000'000;

// Two-phase dense simplex, Bland's rule in both phases, so runs are
// deterministic and finite. Tiny solution entries (within kTol of 0) are
// clamped to exactly 0 and the objective recomputed from the clamped vector.
LPSolution solve(const LinearProgram& lp, long max_iterations = kDefaultIterationLimit);

// Product of rewrite_absolute: the expanded program plus the bookkeeping
// needed to map its solutions back onto the original variables.
struct AbsRewrite {
    LinearProgram lp;
    // Per original variable: either all three indices (split variables and
    // the bound t') or all -1 when the variable was left as is.
    std::vector<int> plus_index;
    std::vector<int> minus_index;
    std::vector<int> abs_index;

    // Values of the original variables (split recombined as plus - minus).
    std::vector<double> recover(const LPSolution& s) const;
};

// Makes the listed variables free and replaces their objective weight w with
// w * |x|: x is split into plus/minus parts and a bound t' >= |x| is added
// via two extra inequality rows per variable. Exact only for w >= 0
// (NegativeWeightOnAbs otherwise); at any optimum t' = |x| because w > 0
// presses the bound, and when w = 0, t' is harmless slack.
AbsRewrite rewrite_absolute(const LinearProgram& lp, const std::vector<int>& free_variables);

// Human-readable dump for debugging.
std::string to_lp_text(const LinearProgram& lp);

}  // namespace captrans
