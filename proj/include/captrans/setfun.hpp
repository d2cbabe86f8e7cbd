#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "captrans/errors.hpp"

namespace captrans {

// Comparison tolerance used across the library (validation, marginal checks,
// optimality). Formatting and clamping use it too, so results stay stable.
inline constexpr double kTol = 1e-9;

// Subsets of a universe are bitmasks: bit i set <=> element i present.
// 0 is the empty set, (1 << n) - 1 the full set.
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return __builtin_popcount(s); }

// Largest universe accepted by default; CAPTRANS_MAX_N overrides it.
int max_universe_size();

// Finite reference set with optional element labels. Everything downstream
// (capacities, costs, plans) indexes subsets as bitmasks over this.
class Universe {
public:
    explicit Universe(int n);
    Universe(int n, std::vector<std::string> labels);

    int size() const { return n_; }
    std::uint32_t subset_count() const { return std::uint32_t{1} << n_; }
    Subset full_set() const { return subset_count() - 1; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }

    // "{}" for the empty set, "{x1,x3}" otherwise.
    std::string subset_name(Subset s) const;

    bool operator==(const Universe& other) const {
        return n_ == other.n_ && labels_ == other.labels_;
    }

private:
    int n_;
    std::vector<std::string> labels_;
};

// All subsets ordered by (cardinality, bitmask). This is the variable order
// used when assembling transport programs; storage order stays plain bitmask.
std::vector<Subset> graded_subsets(const Universe& u);

class Capacity;

// Checks boundary conditions, the [0,1] range and monotonicity over all
// covering pairs (A, A+{i}); the first failure in that scan order is thrown.
// Values beyond 1 are rejected; values[full] may be below 1 (subnormalized
// capacities are legal, is_normalized() reports which case holds).
Capacity validate_capacity(std::vector<double> values, const Universe& u);

// Monotone set function with mu(empty) = 0 and values in [0, 1]. Instances
// only exist after passing validate_capacity, so the invariants can be
// assumed everywhere a Capacity is taken.
class Capacity {
public:
    const Universe& universe() const { return u_; }
    const std::vector<double>& values() const { return values_; }
    double at(Subset s) const { return values_.at(s); }
    double total() const { return values_.back(); }
    bool is_normalized() const { return normalized_; }
    std::vector<double> singleton_values() const;

private:
    friend Capacity validate_capacity(std::vector<double>, const Universe&);
    Capacity(std::vector<double> values, Universe u, bool normalized)
        : u_(std::move(u)), values_(std::move(values)), normalized_(normalized) {}

    Universe u_;
    std::vector<double> values_;
    bool normalized_;
};

enum class VectorKind { Generic, Mobius, MaxPlus, Bpa };

// Signed set vector indexed by subset, produced by the transforms. Kinds
// other than Generic require value(empty) = 0; Bpa additionally requires
// nonnegative entries summing to 1 (within kTol).
class SetVector {
public:
    SetVector(std::vector<double> values, const Universe& u, VectorKind kind);

    const Universe& universe() const { return u_; }
    const std::vector<double>& values() const { return values_; }
    double at(Subset s) const { return values_.at(s); }
    VectorKind kind() const { return kind_; }
    double sum() const;

private:
    Universe u_;
    std::vector<double> values_;
    VectorKind kind_;
};

// Alternating-sum transform; invertible. Computed by the in-place recursion
// over bits, one subtraction per (bit, subset) pair.
SetVector mobius(const Capacity& mu);

// Rebuilds the capacity by cumulative sums and validates it; throws
// NotAMeasure when the input is not the transform of any capacity.
Capacity mobius_inverse(const SetVector& m);

// True when the alternating-sum transform is nonnegative everywhere and sums
// to 1, i.e. the capacity is a belief function and the transform its bpa.
bool is_belief(const Capacity& mu);

// Max-difference transform: value(B) = mu(B) - max over strict subsets of B.
// Nonnegative for every capacity. value(empty) = 0.
SetVector maxplus(const Capacity& mu);

// Rebuilds mu in increasing cardinality order. Entries must be nonnegative
// (NegativeValue) and the result must be a capacity (NotAMeasure).
Capacity maxplus_inverse(const SetVector& m);

// True when mu(A) equals the sum of its singletons for every A (within kTol).
bool is_additive(const Capacity& mu);

}  // namespace captrans
