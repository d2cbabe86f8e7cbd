#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "captrans/cost.hpp"
#include "captrans/lp.hpp"
#include "captrans/setfun.hpp"

namespace captrans {

enum class Method { Classical, Bpa, Mobius, MaxPlus };

const char* to_string(Method m);
Method method_from_string(const std::string& s);

// Mass assignment between two universes plus solver metadata. Classical
// plans store n x m point masses; the subset methods store 2^n x 2^m subset
// masses where row/column 0 is the empty set (lack mass lives there).
struct TransportPlan {
    Universe x;
    Universe y;
    Method method = Method::Classical;
    std::vector<double> mass;  // row-major
    double objective = 0.0;
    LPStatus status = LPStatus::Optimal;
    long iterations = 0;

    TransportPlan(const Universe& x, const Universe& y, Method method);

    std::size_t rows() const {
        return method == Method::Classical ? x.size() : x.subset_count();
    }
    std::size_t columns() const {
        return method == Method::Classical ? y.size() : y.subset_count();
    }
    // Mass between two points, whichever indexing the method uses.
    double point_mass(int i, int j) const {
        if (i < 0 || i >= x.size() || j < 0 || j >= y.size()) {
            throw std::out_of_range("point index out of range");
        }
        if (method == Method::Classical) return mass[static_cast<std::size_t>(i) * columns() + j];
        return at(Subset{1} << i, Subset{1} << j);
    }
    double at(Subset a, Subset b) const { return mass[index(a, b)]; }
    void set(Subset a, Subset b, double v) { mass[index(a, b)] = v; }
    double lack_mu(Subset a) const { return at(a, 0); }
    double lack_nu(Subset b) const { return at(0, b); }
    double total_mass() const;

private:
    std::size_t index(Subset a, Subset b) const {
        if (a >= rows() || b >= columns()) throw std::out_of_range("plan index out of range");
        return static_cast<std::size_t>(a) * columns() + b;
    }
};

// Validation report: sign/structure rules plus the marginal laws measured
// two ways, on the transform vectors and cumulatively on the measures.
struct PlanValidation {
    bool sign_ok = true;
    std::vector<std::string> issues;
    double max_transform_violation = 0.0;
    double max_cumulative_violation = 0.0;

    double max_violation() const {
        return max_transform_violation > max_cumulative_violation ? max_transform_violation
                                                                  : max_cumulative_violation;
    }
    bool accepted(double tol = kTol) const {
        return sign_ok && max_transform_violation <= tol && max_cumulative_violation <= tol;
    }
};

// LP assemblies, exposed so the brute-force checks can inspect the exact
// programs the solvers run. Variables follow graded subset order.
LinearProgram build_classical_lp(const std::vector<double>& p, const std::vector<double>& q,
                                 const GroundCost& c);
LinearProgram build_bpa_lp(const Capacity& mu, const Capacity& nu, const CostMatrix& cb);
// Base program with signed assignments still plain; pair with the returned
// variable list through rewrite_absolute before solving.
std::pair<LinearProgram, std::vector<int>> build_mobius_lp(const Capacity& mu,
                                                           const Capacity& nu,
                                                           const CostMatrix& cm);
// include_empty=false builds the strict system with no empty-set columns or
// rows, which is infeasible whenever transform mass differs.
LinearProgram build_maxplus_lp(const Capacity& mu, const Capacity& nu, const CostMatrix& ca,
                               bool include_empty = true);

TransportPlan solve_classical(const std::vector<double>& p, const std::vector<double>& q,
                              const GroundCost& c);
TransportPlan solve_bpa(const Capacity& mu, const Capacity& nu, const CostMatrix& cb);
TransportPlan solve_mobius(const Capacity& mu, const Capacity& nu, const CostMatrix& cm);
TransportPlan solve_maxplus(const Capacity& mu, const Capacity& nu, const CostMatrix& ca);

PlanValidation validate_plan(const TransportPlan& plan, const Capacity& mu, const Capacity& nu);

// Objective value of solve_maxplus; zero when mu = nu and ca has a zero
// diagonal. Throws SolverLimit if the solve does not finish.
double discrepancy(const Capacity& mu, const Capacity& nu, const CostMatrix& ca);

}  // namespace captrans
