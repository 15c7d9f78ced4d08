#pragma once

#include <stdexcept>
#include <string>

namespace densitycut {

// Base class for all library errors. Validation-type errors (bad input,
// unknown family) derive from ValidationError; numerical failures from
// SolverError. The CLI maps these to exit codes 2 and 3 respectively.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct SolverError : Error {
    using Error::Error;
};

struct OutsideDomain : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownFamily : ValidationError {
    using ValidationError::ValidationError;
};

struct BadParams : ValidationError {
    using ValidationError::ValidationError;
};

struct NonIntegrable : SolverError {
    using SolverError::SolverError;
};

struct DegenerateMass : SolverError {
    using SolverError::SolverError;
};

struct SolverNoConverge : SolverError {
    double residual;
    int iterations;
    SolverNoConverge(double res, int iters)
        : SolverError("eigensolver did not converge: residual=" + std::to_string(res) +
                      " after " + std::to_string(iters) + " iterations"),
          residual(res), iterations(iters) {}
};

struct SingularPencil : SolverError {
    using SolverError::SolverError;
};

struct GridTooCoarse : ValidationError {
    using ValidationError::ValidationError;
};

struct GridTooFine : ValidationError {
    using ValidationError::ValidationError;
};

struct EmptySide : ValidationError {
    using ValidationError::ValidationError;
};

struct ConstantVector : ValidationError {
    using ValidationError::ValidationError;
};

struct WitnessDegenerate : ValidationError {
    using ValidationError::ValidationError;
};

struct RadiusExceedsDomain : ValidationError {
    using ValidationError::ValidationError;
};

struct DisconnectedGraph : ValidationError {
    using ValidationError::ValidationError;
};

struct NoProgress : SolverError {
    using SolverError::SolverError;
};

struct JobConfigError : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace densitycut
