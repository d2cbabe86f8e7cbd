#include "captrans/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "captrans/transport.hpp"

namespace captrans {

namespace {

constexpr int kMaxVars = 20;
constexpr int kMaxRows = 16;

// Gaussian elimination with partial pivoting on [A|b]; returns the solution
// of the square system or false when a pivot is smaller than kTol.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& out) {
    int k = static_cast<int>(b.size());
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r) {
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        }
        if (std::fabs(a[piv][col]) <= kTol) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (int c = col; c < k; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    out.resize(k);
    for (int i = 0; i < k; ++i) out[i] = b[i] / a[i][i];
    return true;
}

bool satisfies_original(const LinearProgram& lp, const std::vector<double>& x) {
    for (double v : x) {
        if (v < -kTol) return false;
    }
    for (const auto& r : lp.rows) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < r.coeffs.size(); ++j) lhs += r.coeffs[j] * x[j];
        if (r.rel == Relation::Equal) {
            if (std::fabs(lhs - r.rhs) > kTol) return false;
        } else if (lhs > r.rhs + kTol) {
            return false;
        }
    }
    return true;
}

}  // namespace

EnumerationResult enumerate_optimum(const LinearProgram& lp) {
    int n_orig = lp.variable_count();
    int m = static_cast<int>(lp.rows.size());
    int slacks = 0;
    for (const auto& r : lp.rows) {
        if (r.rel == Relation::LessEqual) ++slacks;
    }
    int n = n_orig + slacks;
    if (n > kMaxVars) {
        throw TooLarge("enumeration over " + std::to_string(n) +
                       " variables (after slack conversion) exceeds the cap of " +
                       std::to_string(kMaxVars));
    }
    if (m > kMaxRows) {
        throw TooLarge("enumeration over " + std::to_string(m) + " rows exceeds the cap of " +
                       std::to_string(kMaxRows));
    }

    // Equality form.
    std::vector<std::vector<double>> a(m, std::vector<double>(n, 0.0));
    std::vector<double> b(m, 0.0);
    int next_slack = n_orig;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n_orig; ++j) a[i][j] = lp.rows[i].coeffs[j];
        b[i] = lp.rows[i].rhs;
        if (lp.rows[i].rel == Relation::LessEqual) a[i][next_slack++] = 1.0;
    }

    // Row reduction of [A|b]: finds the rank, drops dependent rows, and
    // detects an inconsistent system outright.
    EnumerationResult out;
    {
        std::vector<std::vector<double>> e = a;
        std::vector<double> eb = b;
        int rank = 0;
        for (int col = 0; col < n && rank < m; ++col) {
            int piv = rank;
            for (int r = rank + 1; r < m; ++r) {
                if (std::fabs(e[r][col]) > std::fabs(e[piv][col])) piv = r;
            }
            if (std::fabs(e[piv][col]) <= kTol) continue;
            std::swap(e[piv], e[rank]);
            std::swap(eb[piv], eb[rank]);
            for (int r = 0; r < m; ++r) {
                if (r == rank) continue;
                double f = e[r][col] / e[rank][col];
                if (f == 0.0) continue;
                for (int c = col; c < n; ++c) e[r][c] -= f * e[rank][c];
                eb[r] -= f * eb[rank];
            }
            ++rank;
        }
        for (int r = rank; r < m; ++r) {
            if (std::fabs(eb[r]) > kTol) {
                out.status = LPStatus::Infeasible;
                return out;  // rank of [A|b] exceeds rank of A
            }
        }
        a.assign(e.begin(), e.begin() + rank);
        b.assign(eb.begin(), eb.begin() + rank);
    }
    int rank = static_cast<int>(b.size());
    out.basis_size = rank;

    std::vector<double> extended_obj(n, 0.0);
    for (int j = 0; j < n_orig; ++j) extended_obj[j] = lp.objective[j];

    // March through all C(n, rank) column subsets in lexicographic order.
    std::vector<int> idx(rank);
    for (int i = 0; i < rank; ++i) idx[i] = i;
    bool more = rank <= n;
    double best = 0.0;
    std::vector<double> best_x;
    bool found = false;
    std::vector<std::vector<double>> square(rank, std::vector<double>(rank));
    std::vector<double> sol;
    while (more) {
        ++out.bases_examined;
        for (int r = 0; r < rank; ++r) {
            for (int c = 0; c < rank; ++c) square[r][c] = a[r][idx[c]];
        }
        if (rank == 0 || solve_square(square, b, sol)) {
            std::vector<double> x(n, 0.0);
            bool nonneg = true;
            for (int c = 0; c < rank; ++c) {
                x[idx[c]] = sol[c];
                if (sol[c] < -kTol) nonneg = false;
            }
            if (nonneg) {
                std::vector<double> orig(x.begin(), x.begin() + n_orig);
                if (satisfies_original(lp, orig)) {
                    ++out.feasible_count;
                    double obj = 0.0;
                    for (int j = 0; j < n; ++j) obj += extended_obj[j] * x[j];
                    if (!found || obj < best) {
                        found = true;
                        best = obj;
                        best_x = std::move(orig);
                    }
                }
            }
        }
        // next combination
        int i = rank - 1;
        while (i >= 0 && idx[i] == n - rank + i) --i;
        if (i < 0) {
            more = false;
        } else {
            ++idx[i];
            for (int k2 = i + 1; k2 < rank; ++k2) idx[k2] = idx[k2 - 1] + 1;
        }
    }

    if (!found) {
        out.status = LPStatus::Infeasible;
        return out;
    }
    out.status = LPStatus::Optimal;
    for (double& v : best_x) {
        if (std::fabs(v) <= kTol) v = 0.0;
    }
    out.witness = std::move(best_x);
    out.objective = 0.0;
    for (int j = 0; j < n_orig; ++j) out.objective += lp.objective[j] * out.witness[j];
    return out;
}

TransformCheck direct_transform_check(const Capacity& mu) {
    const Universe& u = mu.universe();
    TransformCheck out;
    SetVector fast_mobius = mobius(mu);
    SetVector fast_maxplus = maxplus(mu);
    for (Subset a = 0; a < u.subset_count(); ++a) {
        // Alternating sum straight from the definition.
        double alt = 0.0;
        Subset sub = a;
        while (true) {
            int sign = ((subset_size(a) - subset_size(sub)) % 2 == 0) ? 1 : -1;
            alt += sign * mu.at(sub);
            if (sub == 0) break;
            sub = (sub - 1) & a;
        }
        if (a == 0) alt = 0.0;
        out.max_mobius_diff = std::max(out.max_mobius_diff, std::fabs(alt - fast_mobius.at(a)));

        // Max over every strict subset, enumerated literally.
        double direct = 0.0;
        if (a != 0) {
            double best = 0.0;
            sub = (a - 1) & a;
            while (true) {
                best = std::max(best, mu.at(sub));
                if (sub == 0) break;
                sub = (sub - 1) & a;
            }
            direct = mu.at(a) - best;
        }
        out.max_maxplus_diff =
            std::max(out.max_maxplus_diff, std::fabs(direct - fast_maxplus.at(a)));
    }
    return out;
}

}  // namespace captrans
