#include "fracsl/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracsl {

void validate(const ProblemSpec& spec) {
    if (!(spec.alpha > 0.0) || !(spec.alpha <= 1.0) || !std::isfinite(spec.alpha))
        throw std::domain_error("alpha must lie in (0, 1], got " + std::to_string(spec.alpha));
    if (!(spec.b > 0.0) || !std::isfinite(spec.b))
        throw std::domain_error("domain length b must be positive and finite");
    if (!std::isfinite(spec.lambda))
        throw std::domain_error("lambda must be finite");
    if (!std::isfinite(spec.L))
        throw std::domain_error("right boundary value L must be finite");
}

ProblemSpec make_problem(double alpha, double lambda, PotentialExpr potential, double b,
                         double L) {
    ProblemSpec spec{alpha, lambda, std::move(potential), b, L};
    validate(spec);
    return spec;
}

}  // namespace fracsl
