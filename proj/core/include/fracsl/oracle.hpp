#pragma once

#include <cstddef>
#include <functional>

namespace fracsl {

/// Classical closed form at α = 1, q = 0, λ < 0:
///   f(t) = L·sin(√(−λ)·t) / sin(√(−λ)·b).
/// Throws ResonantLambdaError when |sin(√(−λ)·b)| < 1e−12 (λ at a
/// resonance −(kπ/b)²); std::domain_error when λ ≥ 0.
double analytic_alpha1(double lambda, double b, double L, double t);

/// Exact solution L·(t/b)^α of the λ + q ≡ 0 case.
double power_law_solution(double alpha, double b, double L, double t);

/// Reference quadrature configuration. `resolution` is the starting panel
/// count; callers validating a grid of n intervals should pass ≥ 8n.
struct OracleConfig {
    std::size_t resolution = 64;
};

/// Brute-force left fractional integral (1/Γ(α))·∫₀ᵗ φ(τ)(t−τ)^{α−1} dτ:
/// φ is taken piecewise linear on a fine grid and the weakly singular
/// kernel is integrated exactly over each panel (naive Riemann sums near
/// τ = t converge too slowly to serve as a reference). The panel count is
/// doubled until the value moves by < 1e−8; OracleNotConvergedError after
/// four doublings without stabilizing.
double direct_left_integral(const std::function<double(double)>& phi, double alpha,
                            double t, const OracleConfig& config = {});

}  // namespace fracsl
