#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "captrans/setfun.hpp"

namespace captrans::testing {

inline std::string data_path(const std::string& name) {
    return std::string(CAPTRANS_DATA_DIR) + "/" + name;
}

inline std::vector<double> random_probability(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> p(n);
    double total = 0.0;
    for (double& v : p) total += (v = u(rng));
    for (double& v : p) v /= total;
    return p;
}

inline Capacity additive_capacity(const std::vector<double>& p, const Universe& u) {
    std::vector<double> v(u.subset_count(), 0.0);
    for (Subset s = 1; s < u.subset_count(); ++s) {
        for (int i = 0; i < u.size(); ++i) {
            if (s & (Subset{1} << i)) v[s] += p[i];
        }
    }
    // Force the full set to exactly 1 so normalization never hinges on
    // floating-point addition order.
    v[u.full_set()] = 1.0;
    return validate_capacity(std::move(v), u);
}

// Monotone closure over random increments, scaled so the full set carries 1.
inline Capacity random_capacity(std::mt19937& rng, const Universe& u) {
    std::uniform_real_distribution<double> inc(0.0, 1.0);
    std::vector<double> v(u.subset_count(), 0.0);
    for (Subset s = 1; s < u.subset_count(); ++s) {
        double floor = 0.0;
        for (int i = 0; i < u.size(); ++i) {
            Subset bit = Subset{1} << i;
            if (s & bit) floor = std::max(floor, v[s ^ bit]);
        }
        v[s] = floor + inc(rng);
    }
    double total = v[u.full_set()];
    for (Subset s = 1; s < u.subset_count(); ++s) v[s] /= total;
    v[u.full_set()] = 1.0;
    return validate_capacity(std::move(v), u);
}

// Random basic probability assignment pushed through the cumulative-sum
// inverse; the result is a belief function by construction.
inline Capacity random_belief(std::mt19937& rng, const Universe& u) {
    std::uniform_real_distribution<double> mass(0.0, 1.0);
    std::vector<double> m(u.subset_count(), 0.0);
    double total = 0.0;
    for (Subset s = 1; s < u.subset_count(); ++s) total += (m[s] = mass(rng));
    for (Subset s = 1; s < u.subset_count(); ++s) m[s] /= total;
    return mobius_inverse(SetVector(std::move(m), u, VectorKind::Mobius));
}

}  // namespace captrans::testing
