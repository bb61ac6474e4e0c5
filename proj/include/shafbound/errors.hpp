#pragma once

#include <stdexcept>
#include <string>

namespace shafbound {

/// Base for input-validation failures (bad parameters, violated preconditions).
/// The CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolated : ValidationError {
    using ValidationError::ValidationError;
};

/// Base for failures detected during a computation that started with valid
/// input. The CLI maps these to exit code 2.
struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The input polynomial admits no Gotzmann binomial-sum decomposition
/// (or the search exceeded its configured cap).
struct NotGotzmann : ComputationError {
    using ComputationError::ComputationError;
};

/// A quantity that must be an exact integer is not.
struct NonIntegral : ComputationError {
    using ComputationError::ComputationError;
};

/// A quantity that must be positive is zero or negative.
struct NonPositive : ComputationError {
    using ComputationError::ComputationError;
};

/// A high-precision evaluation sits too close to an integer to round safely.
struct PrecisionAmbiguity : ComputationError {
    using ComputationError::ComputationError;
};

/// An exponent that must be non-negative came out negative.
struct ExponentNegative : ComputationError {
    using ComputationError::ComputationError;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : ComputationError {
    using ComputationError::ComputationError;
};

/// A lemma's hypotheses do not hold for the given input, so its conclusion
/// is not being tested at all.
struct HypothesisViolated : ComputationError {
    using ComputationError::ComputationError;
};

/// A self-check that can only fail through an implementation bug failed.
struct InternalInconsistency : ComputationError {
    using ComputationError::ComputationError;
};

}  // namespace shafbound
