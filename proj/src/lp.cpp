#include "captrans/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "captrans/setfun.hpp"

namespace captrans {

const char* to_string(LPStatus s) {
    switch (s) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Infeasible: return "infeasible";
        case LPStatus::Unbounded: return "unbounded";
        case LPStatus::IterationLimit: return "iteration_limit";
    }
    return "?";
}

int LinearProgram::add_variable(std::string name, double objective_weight) {
    if (!rows.empty()) {
        throw std::invalid_argument("add variables before constraints");
    }
    if (!std::isfinite(objective_weight)) {
        throw std::invalid_argument("objective weight must be finite");
    }
    names.push_back(std::move(name));
    objective.push_back(objective_weight);
    return static_cast<int>(objective.size()) - 1;
}

void LinearProgram::add_constraint(std::vector<double> coeffs, Relation rel, double rhs) {
    if (coeffs.size() != objective.size()) {
        throw std::invalid_argument("constraint width " + std::to_string(coeffs.size()) +
                                    " does not match variable count " +
                                    std::to_string(objective.size()));
    }
    for (double c : coeffs) {
        if (!std::isfinite(c)) throw std::invalid_argument("constraint coefficients must be finite");
    }
    if (!std::isfinite(rhs)) throw std::invalid_argument("constraint rhs must be finite");
    rows.push_back(Row{std::move(coeffs), rel, rhs});
}

namespace {

// Dense tableau in equality form with all rhs >= 0. Column layout: the
// original variables, then one slack per inequality row, then artificials.
class Tableau {
public:
    Tableau(const LinearProgram& lp, long max_iterations)
        : max_iterations_(max_iterations), n_orig_(lp.variable_count()) {
        int m = static_cast<int>(lp.rows.size());
        int slacks = 0;
        for (const auto& r : lp.rows) {
            if (r.rel == Relation::LessEqual) ++slacks;
        }
        n_cols_ = n_orig_ + slacks;
        a_.assign(m, std::vector<double>(n_cols_, 0.0));
        b_.assign(m, 0.0);
        basis_.assign(m, -1);

        int next_slack = n_orig_;
        std::vector<int> slack_col(m, -1);
        for (int i = 0; i < m; ++i) {
            const auto& r = lp.rows[i];
            for (int j = 0; j < n_orig_; ++j) a_[i][j] = r.coeffs[j];
            b_[i] = r.rhs;
            if (r.rel == Relation::LessEqual) {
                slack_col[i] = next_slack;
                a_[i][next_slack] = 1.0;
                ++next_slack;
            }
            if (b_[i] < 0.0) {
                for (auto& v : a_[i]) v = -v;
                b_[i] = -b_[i];
                slack_col[i] = -1;  // slack coefficient is now -1, unusable as a start basis
            }
        }
        // Slack columns with +1 serve as the initial basis for their row;
        // everything else gets an artificial.
        artificial_start_ = n_cols_;
        for (int i = 0; i < m; ++i) {
            if (slack_col[i] >= 0) {
                basis_[i] = slack_col[i];
            } else {
                for (auto& row : a_) row.push_back(0.0);
                a_[i][n_cols_] = 1.0;
                basis_[i] = n_cols_;
                ++n_cols_;
            }
        }
    }

    // Returns Optimal when a basic feasible solution exists, Infeasible or
    // IterationLimit otherwise.
    LPStatus phase1() {
        if (n_cols_ == artificial_start_) return LPStatus::Optimal;  // all-slack start
        std::vector<double> cost(n_cols_, 0.0);
        for (int j = artificial_start_; j < n_cols_; ++j) cost[j] = 1.0;
        load_objective(cost);
        LPStatus st = run(cost, /*phase1=*/true);
        if (st != LPStatus::Optimal) return st;
        if (objval_ > kTol) return LPStatus::Infeasible;
        drive_out_artificials();
        return LPStatus::Optimal;
    }

    LPStatus phase2(const std::vector<double>& orig_objective) {
        std::vector<double> cost(n_cols_, 0.0);
        for (int j = 0; j < n_orig_; ++j) cost[j] = orig_objective[j];
        load_objective(cost);
        return run(cost, /*phase1=*/false);
    }

    long iterations() const { return iterations_; }

    std::vector<double> extract() const {
        std::vector<double> x(n_orig_, 0.0);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i] < n_orig_) x[basis_[i]] = b_[i];
        }
        return x;
    }

private:
    void load_objective(const std::vector<double>& cost) {
        z_.assign(n_cols_, 0.0);
        objval_ = 0.0;
        for (int j = 0; j < n_cols_; ++j) z_[j] = cost[j];
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            double cb = cost[basis_[i]];
            if (cb == 0.0) continue;
            for (int j = 0; j < n_cols_; ++j) z_[j] -= cb * a_[i][j];
            objval_ += cb * b_[i];
        }
    }

    void pivot(int r, int p) {
        double piv = a_[r][p];
        for (int j = 0; j < n_cols_; ++j) a_[r][j] /= piv;
        b_[r] /= piv;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            double f = a_[i][p];
            if (f == 0.0) continue;
            for (int j = 0; j < n_cols_; ++j) a_[i][j] -= f * a_[r][j];
            b_[i] -= f * b_[r];
            if (b_[i] < 0.0 && b_[i] > -kTol) b_[i] = 0.0;
        }
        double f = z_[p];
        if (f != 0.0) {
            for (int j = 0; j < n_cols_; ++j) z_[j] -= f * a_[r][j];
            objval_ += f * b_[r];
        }
        basis_[r] = p;
    }

    LPStatus run(const std::vector<double>& cost, bool phase1) {
        (void)cost;
        int limit_col = phase1 ? n_cols_ : artificial_start_;
        while (true) {
            // Bland: entering column is the lowest index with a negative
            // reduced cost; leaving row breaks ratio ties by lowest basic
            // variable index. Keeps the walk finite on degenerate problems.
            int p = -1;
            for (int j = 0; j < limit_col; ++j) {
                if (z_[j] < -kTol) {
                    p = j;
                    break;
                }
            }
            if (p < 0) return LPStatus::Optimal;
            int r = -1;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < a_.size(); ++i) {
                if (a_[i][p] <= kTol) continue;
                double ratio = b_[i] / a_[i][p];
                if (r < 0 || ratio < best - 1e-12 ||
                    (ratio <= best + 1e-12 && basis_[i] < basis_[r])) {
                    r = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (r < 0) {
                if (phase1) throw Error("phase 1 ray: numerical breakdown");
                return LPStatus::Unbounded;
            }
            if (++iterations_ > max_iterations_) return LPStatus::IterationLimit;
            pivot(r, p);
        }
    }

    // Pivots artificials out of the basis; a row with no usable structural
    // entry is a redundant constraint and is dropped.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < basis_.size();) {
            if (basis_[i] < artificial_start_) {
                ++i;
                continue;
            }
            int p = -1;
            for (int j = 0; j < artificial_start_; ++j) {
                if (std::fabs(a_[i][j]) > kTol) {
                    p = j;
                    break;
                }
            }
            if (p >= 0) {
                pivot(static_cast<int>(i), p);
                ++i;
            } else {
                a_.erase(a_.begin() + i);
                b_.erase(b_.begin() + i);
                basis_.erase(basis_.begin() + i);
            }
        }
        // Artificial columns are dead from here on; truncate them.
        for (auto& row : a_) row.resize(artificial_start_);
        n_cols_ = artificial_start_;
    }

    long max_iterations_;
    long iterations_ = 0;
    int n_orig_;
    int n_cols_;
    int artificial_start_;
    std::vector<std::vector<double>> a_;
    std::vector<double> b_;
    std::vector<int> basis_;
    std::vector<double> z_;
    double objval_ = 0.0;
};

}  // namespace

LPSolution solve(const LinearProgram& lp, long max_iterations) {
    for (double c : lp.objective) {
        if (!std::isfinite(c)) throw std::invalid_argument("objective must be finite");
    }
    for (const auto& r : lp.rows) {
        if (r.coeffs.size() != lp.objective.size()) {
            throw std::invalid_argument("constraint width does not match variable count");
        }
        for (double c : r.coeffs) {
            if (!std::isfinite(c)) throw std::invalid_argument("coefficients must be finite");
        }
    }

    Tableau t(lp, max_iterations);
    LPSolution out;
    LPStatus st = t.phase1();
    if (st == LPStatus::Optimal) st = t.phase2(lp.objective);
    out.status = st;
    out.iterations = t.iterations();
    if (st != LPStatus::Optimal) return out;

    out.values = t.extract();
    for (double& v : out.values) {
        if (std::fabs(v) <= kTol) v = 0.0;
    }
    out.objective = 0.0;
    for (int j = 0; j < lp.variable_count(); ++j) out.objective += lp.objective[j] * out.values[j];
    return out;
}

std::vector<double> AbsRewrite::recover(const LPSolution& s) const {
    if (s.values.empty()) return {};
    std::vector<double> out(plus_index.size(), 0.0);
    for (std::size_t v = 0; v < plus_index.size(); ++v) {
        if (plus_index[v] < 0) {
            out[v] = s.values[v];
        } else {
            out[v] = s.values[plus_index[v]] - s.values[minus_index[v]];
            if (std::fabs(out[v]) <= kTol) out[v] = 0.0;
        }
    }
    return out;
}

AbsRewrite rewrite_absolute(const LinearProgram& lp, const std::vector<int>& free_variables) {
    int n = lp.variable_count();
    std::vector<bool> marked(n, false);
    for (int v : free_variables) {
        if (v < 0 || v >= n) throw std::invalid_argument("free variable index out of range");
        if (marked[v]) throw std::invalid_argument("duplicate free variable index");
        marked[v] = true;
        if (lp.objective[v] < 0.0) {
            throw NegativeWeightOnAbs("variable '" + lp.names[v] +
                                      "' has negative objective weight " +
                                      std::to_string(lp.objective[v]));
        }
    }

    AbsRewrite rw;
    rw.plus_index.assign(n, -1);
    rw.minus_index.assign(n, -1);
    rw.abs_index.assign(n, -1);

    // The original column doubles as the plus part; the minus part and the
    // bound variable are appended, in the order the caller listed them.
    rw.lp.names = lp.names;
    rw.lp.objective = lp.objective;
    for (int v : free_variables) {
        rw.plus_index[v] = v;
        rw.lp.objective[v] = 0.0;
        rw.minus_index[v] = rw.lp.add_variable(lp.names[v] + "_neg", 0.0);
        rw.abs_index[v] = rw.lp.add_variable(lp.names[v] + "_abs", lp.objective[v]);
    }
    int total = rw.lp.variable_count();
    for (const auto& r : lp.rows) {
        std::vector<double> coeffs(total, 0.0);
        for (int j = 0; j < n; ++j) coeffs[j] = r.coeffs[j];
        for (int v : free_variables) coeffs[rw.minus_index[v]] = -r.coeffs[v];
        rw.lp.add_constraint(std::move(coeffs), r.rel, r.rhs);
    }
    for (int v : free_variables) {
        std::vector<double> up(total, 0.0), down(total, 0.0);
        up[v] = 1.0;
        up[rw.minus_index[v]] = -1.0;
        up[rw.abs_index[v]] = -1.0;
        down[v] = -1.0;
        down[rw.minus_index[v]] = 1.0;
        down[rw.abs_index[v]] = -1.0;
        rw.lp.add_constraint(std::move(up), Relation::LessEqual, 0.0);
        rw.lp.add_constraint(std::move(down), Relation::LessEqual, 0.0);
    }
    return rw;
}

std::string to_lp_text(const LinearProgram& lp) {
    std::ostringstream os;
    auto term = [&](double c, const std::string& name, bool first) {
        if (first) {
            if (c < 0) os << "- ";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << std::fabs(c) << " " << name;
    };
    os << "minimize\n  ";
    bool first = true;
    for (int j = 0; j < lp.variable_count(); ++j) {
        if (lp.objective[j] == 0.0) continue;
        term(lp.objective[j], lp.names[j], first);
        first = false;
    }
    if (first) os << "0";
    os << "\nsubject to\n";
    for (const auto& r : lp.rows) {
        os << "  ";
        first = true;
        for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
            if (r.coeffs[j] == 0.0) continue;
            term(r.coeffs[j], lp.names[j], first);
            first = false;
        }
        if (first) os << "0";
        os << (r.rel == Relation::Equal ? " = " : " <= ") << r.rhs << "\n";
    }
    os << "bounds\n  all variables >= 0\n";
    return os.str();
}

}  // namespace captrans
