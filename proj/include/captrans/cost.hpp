#pragma once

#include <stdexcept>
#include <vector>

#include "captrans/setfun.hpp"

namespace captrans {

struct TransportPlan;

// Pointwise cost c(x_i, y_j) >= 0 between elements of two universes.
class GroundCost {
public:
    GroundCost(const Universe& x, const Universe& y, std::vector<double> values);

    const Universe& x() const { return x_; }
    const Universe& y() const { return y_; }
    double at(int i, int j) const {
        if (i < 0 || i >= x_.size() || j < 0 || j >= y_.size()) {
            throw std::out_of_range("point index out of range");
        }
        return values_[static_cast<std::size_t>(i) * y_.size() + j];
    }
    const std::vector<double>& values() const { return values_; }
    double max_value() const;

private:
    Universe x_, y_;
    std::vector<double> values_;  // row-major n x m
};

// |i - j| on element indices.
GroundCost ground_absdiff(const Universe& x);
GroundCost ground_absdiff(const Universe& x, const Universe& y);
// |pos_x[i] - pos_y[j]| on user-supplied numeric positions.
GroundCost ground_absdiff(const Universe& x, const std::vector<double>& positions);
GroundCost ground_absdiff(const Universe& x, const Universe& y,
                          const std::vector<double>& positions_x,
                          const std::vector<double>& positions_y);

// Cost on pairs of subsets, empty set included. Row index is a subset of X,
// column index a subset of Y; entry (0, 0) is the (empty, empty) pair.
class CostMatrix {
public:
    CostMatrix(const Universe& x, const Universe& y, std::vector<double> values);

    const Universe& x() const { return x_; }
    const Universe& y() const { return y_; }
    double at(Subset a, Subset b) const {
        if (a >= x_.subset_count() || b >= y_.subset_count()) {
            throw std::out_of_range("subset index out of range");
        }
        return values_[static_cast<std::size_t>(a) * y_.subset_count() + b];
    }
    const std::vector<double>& values() const { return values_; }

private:
    Universe x_, y_;
    std::vector<double> values_;  // row-major 2^n x 2^m
};

// Penalty lift: singleton-singleton pairs copy c; a pair mixing a singleton
// with a non-singleton (empty set included) costs kappa; everything else is
// free. With bpa_mode, every pair other than singleton-singleton costs kappa
// instead, except (empty, empty) which stays 0.
CostMatrix lift_kappa(const GroundCost& c, double kappa, bool bpa_mode = false);

// Two-penalty lift: singleton-singleton copies c; any nonempty set paired
// with the empty set costs kappa_plus; singleton with non-singleton costs
// kappa; non-singleton pairs are free. kappa_plus > kappa > max(c), so
// cost(A, empty) + cost(empty, B) >= cost(A, B) holds for every pair
// (checked exhaustively after construction).
CostMatrix lift_tiered(const GroundCost& c, double kappa, double kappa_plus);

// Weighted lift: nonempty sets pair with the empty set at kappa; a pair of
// nonempty sets costs c(x_i, y_j) scaled down by how many subsets share that
// representative, where x_i is the argmin of the singleton values of mu over
// A (stable tie-break) and y_j likewise for nu over B.
CostMatrix lift_equalized(const GroundCost& c, const Capacity& mu, const Capacity& nu,
                          double kappa);

// Smallest element index attaining the minimum of values over the subset.
int stable_argmin(const std::vector<double>& values, Subset a);

// 1-based ranks in increasing order of value, ties broken by element index.
std::vector<int> increasing_ranks(const std::vector<double>& values);

// True when the pointwise plan agrees with the subset plan on every
// singleton pair within kTol.
bool refines(const TransportPlan& pointwise, const TransportPlan& subsetwise);

}  // namespace captrans
