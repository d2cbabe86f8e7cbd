#include "captrans/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace captrans {

const char* to_string(Method m) {
    switch (m) {
        case Method::Classical: return "classical";
        case Method::Bpa: return "bpa";
        case Method::Mobius: return "mobius";
        case Method::MaxPlus: return "maxplus";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    if (s == "classical") return Method::Classical;
    if (s == "bpa") return Method::Bpa;
    if (s == "mobius") return Method::Mobius;
    if (s == "maxplus") return Method::MaxPlus;
    throw std::invalid_argument("unknown method '" + s + "'");
}

TransportPlan::TransportPlan(const Universe& x, const Universe& y, Method method)
    : x(x), y(y), method(method) {
    std::size_t rows = method == Method::Classical ? x.size() : x.subset_count();
    std::size_t cols = method == Method::Classical ? y.size() : y.subset_count();
    mass.assign(rows * cols, 0.0);
}

double TransportPlan::total_mass() const {
    return std::accumulate(mass.begin(), mass.end(), 0.0);
}

namespace {

// Transform values carried into marginal rows; entries that are tiny
// negatives from float noise are clamped so the row system stays feasible
// for nonnegative variables.
std::vector<double> clamped_nonneg(const SetVector& v) {
    std::vector<double> out = v.values();
    for (double& t : out) {
        if (t < 0.0 && t >= -kTol) t = 0.0;
    }
    return out;
}

std::string pair_name(const Universe& x, const Universe& y, Subset a, Subset b) {
    return "t(" + x.subset_name(a) + "," + y.subset_name(b) + ")";
}

}  // namespace

LinearProgram build_classical_lp(const std::vector<double>& p, const std::vector<double>& q,
                                 const GroundCost& c) {
    int n = c.x().size(), m = c.y().size();
    if (static_cast<int>(p.size()) != n || static_cast<int>(q.size()) != m) {
        throw std::invalid_argument("marginal lengths do not match the cost universes");
    }
    for (double v : p) {
        if (v < -kTol) throw NegativeValue("negative marginal entry " + std::to_string(v));
    }
    for (double v : q) {
        if (v < -kTol) throw NegativeValue("negative marginal entry " + std::to_string(v));
    }
    double sp = std::accumulate(p.begin(), p.end(), 0.0);
    double sq = std::accumulate(q.begin(), q.end(), 0.0);
    if (std::fabs(sp - sq) > kTol) {
        throw MarginalMismatch("marginals carry different total mass: " + std::to_string(sp) +
                               " vs " + std::to_string(sq));
    }

    LinearProgram lp;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            lp.add_variable("t(" + c.x().label(i) + "," + c.y().label(j) + ")", c.at(i, j));
        }
    }
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(lp.variable_count(), 0.0);
        for (int j = 0; j < m; ++j) row[i * m + j] = 1.0;
        lp.add_constraint(std::move(row), Relation::Equal, std::max(p[i], 0.0));
    }
    for (int j = 0; j < m; ++j) {
        std::vector<double> row(lp.variable_count(), 0.0);
        for (int i = 0; i < n; ++i) row[i * m + j] = 1.0;
        lp.add_constraint(std::move(row), Relation::Equal, std::max(q[j], 0.0));
    }
    return lp;
}

namespace {

// Shared assembly for the three subset formulations. Variables run over the
// selected subset pairs in graded order; one marginal row per nonempty
// subset on each side.
struct SubsetProgram {
    LinearProgram lp;
    std::vector<std::pair<Subset, Subset>> pairs;  // per variable
};

SubsetProgram build_subset_program(const Universe& x, const Universe& y,
                                   const std::vector<double>& row_marginals,
                                   const std::vector<double>& col_marginals,
                                   const CostMatrix& cost, bool include_empty) {
    SubsetProgram sp;
    std::vector<Subset> xs = graded_subsets(x);
    std::vector<Subset> ys = graded_subsets(y);
    for (Subset a : xs) {
        for (Subset b : ys) {
            if (!include_empty && (a == 0 || b == 0)) continue;
            if (a == 0 && b == 0) continue;
            sp.pairs.emplace_back(a, b);
            sp.lp.add_variable(pair_name(x, y, a, b), cost.at(a, b));
        }
    }
    int nv = sp.lp.variable_count();
    for (Subset a : xs) {
        if (a == 0) continue;
        std::vector<double> row(nv, 0.0);
        for (int k = 0; k < nv; ++k) {
            if (sp.pairs[k].first == a) row[k] = 1.0;
        }
        sp.lp.add_constraint(std::move(row), Relation::Equal, row_marginals[a]);
    }
    for (Subset b : ys) {
        if (b == 0) continue;
        std::vector<double> row(nv, 0.0);
        for (int k = 0; k < nv; ++k) {
            if (sp.pairs[k].second == b) row[k] = 1.0;
        }
        sp.lp.add_constraint(std::move(row), Relation::Equal, col_marginals[b]);
    }
    return sp;
}

void check_cost_shape(const Capacity& mu, const Capacity& nu, const CostMatrix& c) {
    if (!(c.x() == mu.universe()) || !(c.y() == nu.universe())) {
        throw std::invalid_argument("cost matrix universes do not match the measures");
    }
}

TransportPlan plan_from_pairs(const Universe& x, const Universe& y, Method method,
                              const SubsetProgram& sp, const std::vector<double>& values,
                              const LPSolution& sol, const CostMatrix& cost) {
    TransportPlan plan(x, y, method);
    plan.status = sol.status;
    plan.iterations = sol.iterations;
    if (sol.status != LPStatus::Optimal) return plan;
    for (std::size_t k = 0; k < sp.pairs.size(); ++k) {
        plan.set(sp.pairs[k].first, sp.pairs[k].second, values[k]);
    }
    // Objective recomputed from the clamped masses so reported cost and plan
    // always agree; exact zeros stay exact.
    plan.objective = 0.0;
    for (std::size_t k = 0; k < sp.pairs.size(); ++k) {
        if (values[k] != 0.0) {
            plan.objective += cost.at(sp.pairs[k].first, sp.pairs[k].second) * values[k];
        }
    }
    return plan;
}

}  // namespace

LinearProgram build_bpa_lp(const Capacity& mu, const Capacity& nu, const CostMatrix& cb) {
    check_cost_shape(mu, nu, cb);
    if (!is_belief(mu)) throw NotBelief("first measure is not a belief function");
    if (!is_belief(nu)) throw NotBelief("second measure is not a belief function");
    std::vector<double> rm = clamped_nonneg(mobius(mu));
    std::vector<double> cm = clamped_nonneg(mobius(nu));
    return build_subset_program(mu.universe(), nu.universe(), rm, cm, cb, false).lp;
}

std::pair<LinearProgram, std::vector<int>> build_mobius_lp(const Capacity& mu,
                                                           const Capacity& nu,
                                                           const CostMatrix& cm) {
    check_cost_shape(mu, nu, cm);
    if (std::fabs(mu.total() - nu.total()) > kTol) {
        throw TotalMassMismatch("signed assignments need equal totals, got " +
                                std::to_string(mu.total()) + " vs " +
                                std::to_string(nu.total()));
    }
    SubsetProgram sp = build_subset_program(mu.universe(), nu.universe(), mobius(mu).values(),
                                            mobius(nu).values(), cm, false);
    std::vector<int> free_vars(sp.lp.variable_count());
    std::iota(free_vars.begin(), free_vars.end(), 0);
    return {std::move(sp.lp), std::move(free_vars)};
}

LinearProgram build_maxplus_lp(const Capacity& mu, const Capacity& nu, const CostMatrix& ca,
                               bool include_empty) {
    check_cost_shape(mu, nu, ca);
    std::vector<double> rm = clamped_nonneg(maxplus(mu));
    std::vector<double> cm = clamped_nonneg(maxplus(nu));
    return build_subset_program(mu.universe(), nu.universe(), rm, cm, ca, include_empty).lp;
}

TransportPlan solve_classical(const std::vector<double>& p, const std::vector<double>& q,
                              const GroundCost& c) {
    LinearProgram lp = build_classical_lp(p, q, c);
    LPSolution sol = solve(lp);
    TransportPlan plan(c.x(), c.y(), Method::Classical);
    plan.status = sol.status;
    plan.iterations = sol.iterations;
    if (sol.status != LPStatus::Optimal) return plan;
    plan.mass = sol.values;
    plan.objective = 0.0;
    for (int i = 0; i < c.x().size(); ++i) {
        for (int j = 0; j < c.y().size(); ++j) {
            if (plan.point_mass(i, j) != 0.0) plan.objective += c.at(i, j) * plan.point_mass(i, j);
        }
    }
    return plan;
}

TransportPlan solve_bpa(const Capacity& mu, const Capacity& nu, const CostMatrix& cb) {
    check_cost_shape(mu, nu, cb);
    if (!is_belief(mu)) throw NotBelief("first measure is not a belief function");
    if (!is_belief(nu)) throw NotBelief("second measure is not a belief function");
    std::vector<double> rm = clamped_nonneg(mobius(mu));
    std::vector<double> cm = clamped_nonneg(mobius(nu));
    SubsetProgram sp =
        build_subset_program(mu.universe(), nu.universe(), rm, cm, cb, false);
    LPSolution sol = solve(sp.lp);
    return plan_from_pairs(mu.universe(), nu.universe(), Method::Bpa, sp, sol.values, sol, cb);
}

TransportPlan solve_mobius(const Capacity& mu, const Capacity& nu, const CostMatrix& cm) {
    auto [base, free_vars] = build_mobius_lp(mu, nu, cm);
    AbsRewrite rw = rewrite_absolute(base, free_vars);
    LPSolution sol = solve(rw.lp);
    std::vector<double> values = rw.recover(sol);
    // Pair list must mirror build_mobius_lp's variable order.
    SubsetProgram sp;
    for (Subset a : graded_subsets(mu.universe())) {
        for (Subset b : graded_subsets(nu.universe())) {
            if (a == 0 || b == 0) continue;
            sp.pairs.emplace_back(a, b);
        }
    }
    TransportPlan plan(mu.universe(), nu.universe(), Method::Mobius);
    plan.status = sol.status;
    plan.iterations = sol.iterations;
    if (sol.status != LPStatus::Optimal) return plan;
    for (std::size_t k = 0; k < sp.pairs.size(); ++k) {
        plan.set(sp.pairs[k].first, sp.pairs[k].second, values[k]);
    }
    plan.objective = 0.0;
    for (std::size_t k = 0; k < sp.pairs.size(); ++k) {
        if (values[k] != 0.0) {
            plan.objective +=
                cm.at(sp.pairs[k].first, sp.pairs[k].second) * std::fabs(values[k]);
        }
    }
    return plan;
}

TransportPlan solve_maxplus(const Capacity& mu, const Capacity& nu, const CostMatrix& ca) {
    check_cost_shape(mu, nu, ca);
    std::vector<double> rm = clamped_nonneg(maxplus(mu));
    std::vector<double> cm = clamped_nonneg(maxplus(nu));
    SubsetProgram sp = build_subset_program(mu.universe(), nu.universe(), rm, cm, ca, true);
    LPSolution sol = solve(sp.lp);
    if (sol.status == LPStatus::Infeasible || sol.status == LPStatus::Unbounded) {
        // The all-lack assignment is always feasible and costs are finite.
        throw Error(std::string("internal: lack-extended program reported ") +
                    to_string(sol.status));
    }
    return plan_from_pairs(mu.universe(), nu.universe(), Method::MaxPlus, sp, sol.values, sol,
                           ca);
}

namespace {

void scan_signs(const TransportPlan& plan, PlanValidation& out) {
    const Universe& x = plan.x;
    const Universe& y = plan.y;
    if (plan.method == Method::Bpa || plan.method == Method::MaxPlus) {
        for (Subset a = 0; a < x.subset_count(); ++a) {
            for (Subset b = 0; b < y.subset_count(); ++b) {
                if (plan.at(a, b) < -kTol) {
                    out.sign_ok = false;
                    out.issues.push_back("negative mass " + std::to_string(plan.at(a, b)) +
                                         " on (" + x.subset_name(a) + ", " + y.subset_name(b) +
                                         ")");
                }
            }
        }
    }
    if (plan.method == Method::MaxPlus && std::fabs(plan.at(0, 0)) > kTol) {
        out.sign_ok = false;
        out.issues.push_back("mass on the (empty, empty) pair");
    }
    if (plan.method == Method::Bpa || plan.method == Method::Mobius) {
        for (Subset a = 0; a < x.subset_count(); ++a) {
            if (std::fabs(plan.at(a, 0)) > kTol) {
                out.sign_ok = false;
                out.issues.push_back("mass on empty-set column at row " + x.subset_name(a));
            }
        }
        for (Subset b = 0; b < y.subset_count(); ++b) {
            if (std::fabs(plan.at(0, b)) > kTol) {
                out.sign_ok = false;
                out.issues.push_back("mass on empty-set row at column " + y.subset_name(b));
            }
        }
    }
}

}  // namespace

PlanValidation validate_plan(const TransportPlan& plan, const Capacity& mu, const Capacity& nu) {
    if (!(plan.x == mu.universe()) || !(plan.y == nu.universe())) {
        throw std::invalid_argument("plan universes do not match the measures");
    }
    if (plan.method == Method::Classical) {
        throw std::invalid_argument("classical plans validate against plain marginals, not measures");
    }
    PlanValidation out;
    scan_signs(plan, out);

    const Universe& x = plan.x;
    const Universe& y = plan.y;
    bool maxplus_method = plan.method == Method::MaxPlus;
    SetVector tm = maxplus_method ? maxplus(mu) : mobius(mu);
    SetVector tn = maxplus_method ? maxplus(nu) : mobius(nu);

    std::vector<double> row_sum(x.subset_count(), 0.0);
    std::vector<double> col_sum(y.subset_count(), 0.0);
    for (Subset a = 0; a < x.subset_count(); ++a) {
        for (Subset b = 0; b < y.subset_count(); ++b) {
            row_sum[a] += plan.at(a, b);
            col_sum[b] += plan.at(a, b);
        }
    }

    // Transform-level law: row/column sums match the transform vectors on
    // every nonempty subset.
    for (Subset a = 1; a < x.subset_count(); ++a) {
        out.max_transform_violation =
            std::max(out.max_transform_violation, std::fabs(row_sum[a] - tm.at(a)));
    }
    for (Subset b = 1; b < y.subset_count(); ++b) {
        out.max_transform_violation =
            std::max(out.max_transform_violation, std::fabs(col_sum[b] - tn.at(b)));
    }

    // Measure-level law, stated on mu and nu directly: cumulative sums of
    // row masses for the alternating transform, best-subset value plus row
    // mass for the max-difference transform.
    if (!maxplus_method) {
        for (Subset a = 1; a < x.subset_count(); ++a) {
            double acc = 0.0;
            for (Subset s = 0; s < x.subset_count(); ++s) {
                if ((s & a) == s) acc += row_sum[s];
            }
            out.max_cumulative_violation =
                std::max(out.max_cumulative_violation, std::fabs(acc - mu.at(a)));
        }
        for (Subset b = 1; b < y.subset_count(); ++b) {
            double acc = 0.0;
            for (Subset s = 0; s < y.subset_count(); ++s) {
                if ((s & b) == s) acc += col_sum[s];
            }
            out.max_cumulative_violation =
                std::max(out.max_cumulative_violation, std::fabs(acc - nu.at(b)));
        }
    } else {
        for (Subset a = 1; a < x.subset_count(); ++a) {
            double best = 0.0;
            for (int i = 0; i < x.size(); ++i) {
                Subset bit = Subset{1} << i;
                if (a & bit) best = std::max(best, mu.at(a ^ bit));
            }
            out.max_cumulative_violation =
                std::max(out.max_cumulative_violation, std::fabs(best + row_sum[a] - mu.at(a)));
        }
        for (Subset b = 1; b < y.subset_count(); ++b) {
            double best = 0.0;
            for (int i = 0; i < y.size(); ++i) {
                Subset bit = Subset{1} << i;
                if (b & bit) best = std::max(best, nu.at(b ^ bit));
            }
            out.max_cumulative_violation =
                std::max(out.max_cumulative_violation, std::fabs(best + col_sum[b] - nu.at(b)));
        }
    }
    return out;
}

double discrepancy(const Capacity& mu, const Capacity& nu, const CostMatrix& ca) {
    TransportPlan plan = solve_maxplus(mu, nu, ca);
    if (plan.status != LPStatus::Optimal) {
        throw SolverLimit("discrepancy solve stopped: " + std::string(to_string(plan.status)));
    }
    return plan.objective;
}

}  // namespace captrans
