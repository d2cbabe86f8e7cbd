#include "captrans/setfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace captrans {

namespace {

constexpr int kDefaultMaxN = 6;

bool label_ok(const std::string& s) {
    if (s.empty()) return false;
    if (s.find('+') != std::string::npos) return false;
    return !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

int max_universe_size() {
    const char* env = std::getenv("CAPTRANS_MAX_N");
    if (env == nullptr || *env == '\0') return kDefaultMaxN;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 20) return kDefaultMaxN;
    return static_cast<int>(v);
}

Universe::Universe(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("universe needs at least one element");
    int cap = max_universe_size();
    if (n > cap) {
        throw TooLarge("universe size " + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap) + " (set CAPTRANS_MAX_N to raise it)");
    }
    if (n > kDefaultMaxN) {
        std::fprintf(stderr,
                     "warning: universe size %d means %u subsets; runtimes grow steeply\n", n,
                     std::uint32_t{1} << n);
    }
    labels_.reserve(n);
    for (int i = 0; i < n; ++i) labels_.push_back("x" + std::to_string(i + 1));
}

Universe::Universe(int n, std::vector<std::string> labels) : Universe(n) {
    if (static_cast<int>(labels.size()) != n) {
        throw std::invalid_argument("expected " + std::to_string(n) + " labels, got " +
                                    std::to_string(labels.size()));
    }
    for (const auto& s : labels) {
        if (!label_ok(s)) {
            throw std::invalid_argument("bad element label '" + s +
                                        "': labels are nonempty, not all digits, and contain no '+'");
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) {
                throw std::invalid_argument("duplicate element label '" + labels[i] + "'");
            }
        }
    }
    labels_ = std::move(labels);
}

std::string Universe::subset_name(Subset s) const {
    if (s == 0) return "{}";
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
        if (s & (Subset{1} << i)) {
            if (!first) out += ",";
            out += labels_[i];
            first = false;
        }
    }
    return out + "}";
}

std::vector<Subset> graded_subsets(const Universe& u) {
    std::vector<Subset> order(u.subset_count());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [](Subset a, Subset b) { return subset_size(a) < subset_size(b); });
    return order;
}

Capacity validate_capacity(std::vector<double> values, const Universe& u) {
    if (values.size() != u.subset_count()) {
        throw std::invalid_argument("expected " + std::to_string(u.subset_count()) +
                                    " subset values, got " + std::to_string(values.size()));
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw BoundaryViolation("capacity values must be finite");
    }
    if (std::fabs(values[0]) > kTol) {
        throw BoundaryViolation("value on the empty set is " + std::to_string(values[0]) +
                                ", expected 0");
    }
    for (Subset s = 0; s < u.subset_count(); ++s) {
        if (values[s] < -kTol || values[s] > 1.0 + kTol) {
            throw BoundaryViolation("value " + std::to_string(values[s]) + " on " +
                                    u.subset_name(s) + " is outside [0, 1]");
        }
    }
    // Covering pairs only: monotonicity over (A, A+{i}) implies it everywhere.
    for (Subset s = 0; s < u.subset_count(); ++s) {
        for (int i = 0; i < u.size(); ++i) {
            Subset bit = Subset{1} << i;
            if (s & bit) continue;
            Subset t = s | bit;
            if (values[s] > values[t] + kTol) {
                throw MonotonicityViolation("monotonicity fails: value on " + u.subset_name(s) +
                                                " exceeds value on " + u.subset_name(t),
                                            s, t);
            }
        }
    }
    bool normalized = std::fabs(values.back() - 1.0) <= kTol;
    return Capacity(std::move(values), u, normalized);
}

std::vector<double> Capacity::singleton_values() const {
    std::vector<double> out(u_.size());
    for (int i = 0; i < u_.size(); ++i) out[i] = values_[Subset{1} << i];
    return out;
}

SetVector::SetVector(std::vector<double> values, const Universe& u, VectorKind kind)
    : u_(u), values_(std::move(values)), kind_(kind) {
    if (values_.size() != u.subset_count()) {
        throw std::invalid_argument("expected " + std::to_string(u.subset_count()) +
                                    " subset values, got " + std::to_string(values_.size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("set vector values must be finite");
    }
    if (kind_ != VectorKind::Generic && std::fabs(values_[0]) > kTol) {
        throw std::invalid_argument("transform vectors carry 0 on the empty set");
    }
    if (kind_ == VectorKind::Bpa) {
        for (std::size_t s = 0; s < values_.size(); ++s) {
            if (values_[s] < -kTol) {
                throw NegativeValue("bpa mass " + std::to_string(values_[s]) + " on " +
                                    u_.subset_name(static_cast<Subset>(s)));
            }
        }
        double total = std::accumulate(values_.begin(), values_.end(), 0.0);
        if (std::fabs(total - 1.0) > kTol) {
            throw std::invalid_argument("bpa masses sum to " + std::to_string(total) +
                                        ", expected 1");
        }
    }
}

double SetVector::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

SetVector mobius(const Capacity& mu) {
    std::vector<double> v = mu.values();
    std::uint32_t count = mu.universe().subset_count();
    for (int i = 0; i < mu.universe().size(); ++i) {
        Subset bit = Subset{1} << i;
        for (Subset s = 0; s < count; ++s) {
            if (s & bit) v[s] -= v[s ^ bit];
        }
    }
    v[0] = 0.0;
    return SetVector(std::move(v), mu.universe(), VectorKind::Mobius);
}

Capacity mobius_inverse(const SetVector& m) {
    std::vector<double> v = m.values();
    std::uint32_t count = m.universe().subset_count();
    for (int i = 0; i < m.universe().size(); ++i) {
        Subset bit = Subset{1} << i;
        for (Subset s = 0; s < count; ++s) {
            if (s & bit) v[s] += v[s ^ bit];
        }
    }
    try {
        return validate_capacity(std::move(v), m.universe());
    } catch (const Error& e) {
        throw NotAMeasure(std::string("cumulative sums do not form a capacity: ") + e.what());
    }
}

bool is_belief(const Capacity& mu) {
    SetVector m = mobius(mu);
    for (double v : m.values()) {
        if (v < -kTol) return false;
    }
    return std::fabs(m.sum() - 1.0) <= kTol;
}

SetVector maxplus(const Capacity& mu) {
    // mu is monotone, so the max over strict subsets of B is attained on some
    // B minus one element; scanning those keeps this O(n 2^n).
    const auto& v = mu.values();
    std::uint32_t count = mu.universe().subset_count();
    std::vector<double> out(count, 0.0);
    for (Subset s = 1; s < count; ++s) {
        double best = 0.0;
        for (int i = 0; i < mu.universe().size(); ++i) {
            Subset bit = Subset{1} << i;
            if (s & bit) best = std::max(best, v[s ^ bit]);
        }
        out[s] = v[s] - best;
    }
    return SetVector(std::move(out), mu.universe(), VectorKind::MaxPlus);
}

Capacity maxplus_inverse(const SetVector& m) {
    std::uint32_t count = m.universe().subset_count();
    for (Subset s = 0; s < count; ++s) {
        if (m.at(s) < -kTol) {
            throw NegativeValue("max-difference vector has negative entry " +
                                std::to_string(m.at(s)) + " on " + m.universe().subset_name(s));
        }
    }
    // Removing an element gives a numerically smaller mask, so a plain
    // ascending scan visits subsets before their supersets.
    std::vector<double> v(count, 0.0);
    for (Subset s = 1; s < count; ++s) {
        double best = 0.0;
        for (int i = 0; i < m.universe().size(); ++i) {
            Subset bit = Subset{1} << i;
            if (s & bit) best = std::max(best, v[s ^ bit]);
        }
        v[s] = best + m.at(s);
    }
    try {
        return validate_capacity(std::move(v), m.universe());
    } catch (const Error& e) {
        throw NotAMeasure(std::string("reconstruction is not a capacity: ") + e.what());
    }
}

bool is_additive(const Capacity& mu) {
    std::vector<double> singles = mu.singleton_values();
    std::uint32_t count = mu.universe().subset_count();
    for (Subset s = 0; s < count; ++s) {
        double sum = 0.0;
        for (int i = 0; i < mu.universe().size(); ++i) {
            if (s & (Subset{1} << i)) sum += singles[i];
        }
        if (std::fabs(mu.at(s) - sum) > kTol) return false;
    }
    return true;
}

}  // namespace captrans
