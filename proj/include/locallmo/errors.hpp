#pragma once

#include <stdexcept>
#include <string>

namespace locallmo {

// Error hierarchy shared by all modules. Everything derives from Error so
// callers can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Linear objective has no minimizer over the (unbounded) set.
struct UnboundedObjective : Error {
    using Error::Error;
};

struct InfeasibleCenter : Error {
    using Error::Error;
};

struct BadRadius : Error {
    using Error::Error;
};

// Evaluation outside the analytic domain of an objective.
struct DomainError : Error {
    using Error::Error;
};

// A rule requires a declared constant or optimum field the objective lacks.
struct MissingConstant : Error {
    using Error::Error;
};

// Polyak radius with a vanishing gradient at a non-optimal point.
struct ZeroDenominator : Error {
    using Error::Error;
};

struct UnknownClaim : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Mid-run failure; carries the iteration index and offending inputs in the
// message so rare admissibility violations can be reproduced.
struct SolverError : Error {
    using Error::Error;
};

}  // namespace locallmo
