#include "captrans/cost.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "captrans/transport.hpp"

namespace captrans {

namespace {

void check_cost_values(const std::vector<double>& v, std::size_t expected, const char* what) {
    if (v.size() != expected) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(expected) + " values, got " +
                                    std::to_string(v.size()));
    }
    for (double c : v) {
        if (!std::isfinite(c)) throw std::invalid_argument(std::string(what) + ": non-finite cost");
        if (c < 0.0) {
            throw NegativeValue(std::string(what) + ": negative cost " + std::to_string(c));
        }
    }
}

}  // namespace

GroundCost::GroundCost(const Universe& x, const Universe& y, std::vector<double> values)
    : x_(x), y_(y), values_(std::move(values)) {
    check_cost_values(values_, static_cast<std::size_t>(x.size()) * y.size(), "ground cost");
}

double GroundCost::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

GroundCost ground_absdiff(const Universe& x) { return ground_absdiff(x, x); }

GroundCost ground_absdiff(const Universe& x, const Universe& y) {
    std::vector<double> v(static_cast<std::size_t>(x.size()) * y.size());
    for (int i = 0; i < x.size(); ++i) {
        for (int j = 0; j < y.size(); ++j) {
            v[static_cast<std::size_t>(i) * y.size() + j] = std::fabs(double(i) - double(j));
        }
    }
    return GroundCost(x, y, std::move(v));
}

GroundCost ground_absdiff(const Universe& x, const std::vector<double>& positions) {
    return ground_absdiff(x, x, positions, positions);
}

GroundCost ground_absdiff(const Universe& x, const Universe& y,
                          const std::vector<double>& positions_x,
                          const std::vector<double>& positions_y) {
    if (static_cast<int>(positions_x.size()) != x.size() ||
        static_cast<int>(positions_y.size()) != y.size()) {
        throw std::invalid_argument("positions must list one number per element");
    }
    std::vector<double> v(static_cast<std::size_t>(x.size()) * y.size());
    for (int i = 0; i < x.size(); ++i) {
        for (int j = 0; j < y.size(); ++j) {
            v[static_cast<std::size_t>(i) * y.size() + j] =
                std::fabs(positions_x[i] - positions_y[j]);
        }
    }
    return GroundCost(x, y, std::move(v));
}

CostMatrix::CostMatrix(const Universe& x, const Universe& y, std::vector<double> values)
    : x_(x), y_(y), values_(std::move(values)) {
    check_cost_values(values_, static_cast<std::size_t>(x.subset_count()) * y.subset_count(),
                      "cost matrix");
}

namespace {

void require_kappa_dominates(const GroundCost& c, double kappa) {
    if (!(kappa > c.max_value())) {
        throw KappaTooSmall("kappa " + std::to_string(kappa) +
                            " must exceed the largest ground cost " +
                            std::to_string(c.max_value()));
    }
}

}  // namespace

CostMatrix lift_kappa(const GroundCost& c, double kappa, bool bpa_mode) {
    require_kappa_dominates(c, kappa);
    const Universe& x = c.x();
    const Universe& y = c.y();
    std::vector<double> v(static_cast<std::size_t>(x.subset_count()) * y.subset_count(), 0.0);
    for (Subset a = 0; a < x.subset_count(); ++a) {
        for (Subset b = 0; b < y.subset_count(); ++b) {
            double& out = v[static_cast<std::size_t>(a) * y.subset_count() + b];
            bool sa = subset_size(a) == 1, sb = subset_size(b) == 1;
            if (sa && sb) {
                out = c.at(__builtin_ctz(a), __builtin_ctz(b));
            } else if (a == 0 && b == 0) {
                out = 0.0;
            } else if (bpa_mode) {
                out = kappa;
            } else {
                out = (sa || sb) ? kappa : 0.0;
            }
        }
    }
    return CostMatrix(x, y, std::move(v));
}

CostMatrix lift_tiered(const GroundCost& c, double kappa, double kappa_plus) {
    require_kappa_dominates(c, kappa);
    if (!(kappa_plus > kappa)) {
        throw KappaOrderViolation("kappa_plus " + std::to_string(kappa_plus) +
                                  " must exceed kappa " + std::to_string(kappa));
    }
    const Universe& x = c.x();
    const Universe& y = c.y();
    std::vector<double> v(static_cast<std::size_t>(x.subset_count()) * y.subset_count(), 0.0);
    for (Subset a = 0; a < x.subset_count(); ++a) {
        for (Subset b = 0; b < y.subset_count(); ++b) {
            double& out = v[static_cast<std::size_t>(a) * y.subset_count() + b];
            bool sa = subset_size(a) == 1, sb = subset_size(b) == 1;
            if (a == 0 && b == 0) {
                out = 0.0;
            } else if (a == 0 || b == 0) {
                out = kappa_plus;
            } else if (sa && sb) {
                out = c.at(__builtin_ctz(a), __builtin_ctz(b));
            } else if (sa || sb) {
                out = kappa;
            } else {
                out = 0.0;
            }
        }
    }
    CostMatrix cm(x, y, std::move(v));
    for (Subset a = 0; a < x.subset_count(); ++a) {
        for (Subset b = 0; b < y.subset_count(); ++b) {
            if (cm.at(a, 0) + cm.at(0, b) < cm.at(a, b) - kTol) {
                throw Error("dump inequality fails at (" + x.subset_name(a) + ", " +
                            y.subset_name(b) + ")");
            }
        }
    }
    return cm;
}

int stable_argmin(const std::vector<double>& values, Subset a) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(values.size()); ++i) {
        if (!(a & (Subset{1} << i))) continue;
        if (best < 0 || values[i] < values[best]) best = i;
    }
    if (best < 0) throw std::invalid_argument("argmin over the empty set");
    return best;
}

std::vector<int> increasing_ranks(const std::vector<double>& values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return values[i] < values[j]; });
    std::vector<int> rank(values.size());
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k) + 1;
    return rank;
}

CostMatrix lift_equalized(const GroundCost& c, const Capacity& mu, const Capacity& nu,
                          double kappa) {
    require_kappa_dominates(c, kappa);
    if (!(mu.universe() == c.x()) || !(nu.universe() == c.y())) {
        throw std::invalid_argument("capacity universes do not match the ground cost");
    }
    std::vector<double> p = mu.singleton_values();
    std::vector<double> q = nu.singleton_values();
    std::vector<int> rank_p = increasing_ranks(p);
    std::vector<int> rank_q = increasing_ranks(q);
    int n = c.x().size(), m = c.y().size();

    std::vector<double> v(static_cast<std::size_t>(c.x().subset_count()) * c.y().subset_count(),
                          0.0);
    for (Subset a = 0; a < c.x().subset_count(); ++a) {
        for (Subset b = 0; b < c.y().subset_count(); ++b) {
            double& out = v[static_cast<std::size_t>(a) * c.y().subset_count() + b];
            if (a == 0 && b == 0) {
                out = 0.0;
            } else if (a == 0 || b == 0) {
                out = kappa;
            } else {
                int i = stable_argmin(p, a);
                int j = stable_argmin(q, b);
                // The representative ranked k is the subset minimum in
                // 2^(n-k) subsets; dividing by that count spreads c evenly.
                double weight = std::ldexp(1.0, n - rank_p[i]) * std::ldexp(1.0, m - rank_q[j]);
                out = c.at(i, j) / weight;
            }
        }
    }
    return CostMatrix(c.x(), c.y(), std::move(v));
}

bool refines(const TransportPlan& pointwise, const TransportPlan& subsetwise) {
    if (pointwise.method != Method::Classical) {
        throw std::invalid_argument("first plan must be a pointwise (classical) plan");
    }
    if (subsetwise.method == Method::Classical) {
        throw std::invalid_argument("second plan must be a subset-level plan");
    }
    if (!(pointwise.x == subsetwise.x) || !(pointwise.y == subsetwise.y)) {
        throw std::invalid_argument("plans are over different universes");
    }
    for (int i = 0; i < pointwise.x.size(); ++i) {
        for (int j = 0; j < pointwise.y.size(); ++j) {
            double a = pointwise.point_mass(i, j);
            double b = subsetwise.at(Subset{1} << i, Subset{1} << j);
            if (std::fabs(a - b) > kTol) return false;
        }
    }
    return true;
}

}  // namespace captrans
