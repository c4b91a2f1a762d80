#pragma once

#include "fracsl/grid.hpp"
#include "fracsl/potential.hpp"

#include <vector>

namespace fracsl {

/// Boundary-value problem on [0, b]: order α ∈ (0, 1], spectral parameter
/// λ, potential q(t), and boundary values f(0) = 0, f(b) = L.
struct ProblemSpec {
    double alpha = 0.5;
    double lambda = 0.0;
    PotentialExpr potential;
    double b = 1.0;
    double L = 1.0;
};

/// Throws std::domain_error unless 0 < α ≤ 1 and b > 0 (and both finite).
void validate(const ProblemSpec& spec);

ProblemSpec make_problem(double alpha, double lambda, PotentialExpr potential,
                         double b = 1.0, double L = 1.0);

/// Grid samples of the solution f.
struct Solution {
    UniformGrid grid;
    std::vector<double> values;  // f_i for i = 0..n
};

}  // namespace fracsl
