#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracsl {

/// Base for failures of the numerical pipeline (as opposed to bad inputs,
/// which surface as std::domain_error / std::invalid_argument).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Elimination hit a pivot below the singularity threshold.
class SingularMatrixError : public NumericalError {
public:
    SingularMatrixError(std::size_t column, const std::string& message)
        : NumericalError(message), column_(column) {}

    /// Elimination column whose pivot failed.
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// A convergence-rate denominator vanished (or the difference ratio was
/// non-positive); the empirical rate is undefined at that level.
class DegenerateLadderError : public NumericalError {
public:
    DegenerateLadderError(std::size_t level, const std::string& message)
        : NumericalError(message), level_(level) {}

    /// Middle ladder level at which the rate was requested.
    std::size_t level() const noexcept { return level_; }

private:
    std::size_t level_;
};

/// Reference quadrature failed its resolution-doubling stability test.
class OracleNotConvergedError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// λ sits on (or numerically at) a resonance −(kπ/b)² of the classical
/// closed form, where the boundary-value problem is not uniquely solvable.
class ResonantLambdaError : public std::domain_error {
public:
    ResonantLambdaError(double lambda, const std::string& message)
        : std::domain_error(message), lambda_(lambda) {}

    double lambda() const noexcept { return lambda_; }

private:
    double lambda_;
};

/// Potential q(t) failed to evaluate at a grid node.
class PotentialError : public std::domain_error {
public:
    PotentialError(std::size_t node, double abscissa, const std::string& message)
        : std::domain_error(message), node_(node), abscissa_(abscissa) {}

    std::size_t node() const noexcept { return node_; }
    double abscissa() const noexcept { return abscissa_; }

private:
    std::size_t node_;
    double abscissa_;
};

}  // namespace fracsl
