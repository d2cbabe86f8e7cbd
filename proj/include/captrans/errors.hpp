#pragma once

#include <stdexcept>
#include <string>

namespace captrans {

// Base class for every domain error raised by this library. Anything that is
// a usage bug rather than a data problem (wrong vector length, mismatched
// universes) throws std::invalid_argument instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Measure value outside [0, 1], or mu(empty) != 0.
struct BoundaryViolation : Error {
    using Error::Error;
};

// mu(A) > mu(B) for some A subset of B. Stores the offending pair.
struct MonotonicityViolation : Error {
    MonotonicityViolation(const std::string& msg, unsigned subset, unsigned superset)
        : Error(msg), subset(subset), superset(superset) {}
    unsigned subset;
    unsigned superset;
};

struct NegativeValue : Error {
    using Error::Error;
};

// A vector fed to an inverse transform does not reconstruct a capacity.
struct NotAMeasure : Error {
    using Error::Error;
};

// Penalty below the largest ground cost.
struct KappaTooSmall : Error {
    using Error::Error;
};

// Tiered penalties out of order (kappa_plus < kappa).
struct KappaOrderViolation : Error {
    using Error::Error;
};

// Absolute-value rewrite requested with a negative objective weight on a
// rewritten variable; the rewrite is only exact for nonnegative weights.
struct NegativeWeightOnAbs : Error {
    using Error::Error;
};

// Input to the bpa formulation is not a belief function.
struct NotBelief : Error {
    using Error::Error;
};

// Signed-assignment formulation on measures with different total mass.
struct TotalMassMismatch : Error {
    using Error::Error;
};

struct MarginalMismatch : Error {
    using Error::Error;
};

// Problem exceeds a hard enumeration or universe-size cap.
struct TooLarge : Error {
    using Error::Error;
};

// Solver gave up (iteration budget); carried as a status on results, thrown
// only where an API has no way to report a partial answer.
struct SolverLimit : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace captrans
