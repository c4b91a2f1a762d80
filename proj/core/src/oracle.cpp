#include "fracsl/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracsl/errors.hpp"

namespace fracsl {

double analytic_alpha1(double lambda, double b, double L, double t) {
    if (!(lambda < 0.0))
        throw std::domain_error("analytic_alpha1 requires lambda < 0");
    if (!(b > 0.0)) throw std::domain_error("analytic_alpha1 requires b > 0");
    const double omega = std::sqrt(-lambda);
    const double denom = std::sin(omega * b);
    if (std::abs(denom) < 1e-12)
        throw ResonantLambdaError(lambda,
                                  "lambda = " + std::to_string(lambda) +
                                      " is (numerically) resonant: sin(sqrt(-lambda) b) ~ 0");
    return L * std::sin(omega * t) / denom;
}

double power_law_solution(double alpha, double b, double L, double t) {
    return L * std::pow(t / b, alpha);
}

namespace {

// One pass of the product rule: phi piecewise linear over m panels,
// kernel (t-tau)^(alpha-1) integrated exactly on each panel. Written in
// the distance u = t - tau so the panel bounds are exact multiples of h.
double product_rule_pass(const std::function<double(double)>& phi, double alpha, double t,
                         std::size_t m) {
    const double h = t / static_cast<double>(m);
    double total = 0.0;
    double f_left = phi(0.0);
    for (std::size_t k = 0; k < m; ++k) {
        const double a = static_cast<double>(k) * h;
        const double f_right = phi(k + 1 == m ? t : a + h);
        const double slope = (f_right - f_left) / h;
        const double u1 = static_cast<double>(m - k) * h;      // t - a
        const double u0 = static_cast<double>(m - k - 1) * h;  // t - (a + h)
        const double i0 = (std::pow(u1, alpha) - std::pow(u0, alpha)) / alpha;
        const double i1 =
            (std::pow(u1, alpha + 1.0) - std::pow(u0, alpha + 1.0)) / (alpha + 1.0);
        // integral of (f_left + slope (tau - a)) (t - tau)^(alpha-1)
        total += f_left * i0 + slope * (u1 * i0 - i1);
        f_left = f_right;
    }
    return total / std::tgamma(alpha);
}

}  // namespace

double direct_left_integral(const std::function<double(double)>& phi, double alpha, double t,
                            const OracleConfig& config) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::domain_error("direct_left_integral requires alpha in (0, 1]");
    if (t < 0.0) throw std::domain_error("direct_left_integral requires t >= 0");
    if (t == 0.0) return 0.0;

    std::size_t m = config.resolution < 8 ? 8 : config.resolution;
    double previous = product_rule_pass(phi, alpha, t, m);
    for (int doubling = 0; doubling < 4; ++doubling) {
        m *= 2;
        const double current = product_rule_pass(phi, alpha, t, m);
        if (std::abs(current - previous) < 1e-8) return current;
        previous = current;
    }
    throw OracleNotConvergedError(
        "reference quadrature did not stabilize to 1e-8 after 4 resolution doublings "
        "(final panels: " + std::to_string(m) + ")");
}

}  // namespace fracsl
