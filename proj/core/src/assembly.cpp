#include "fracsl/assembly.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "fracsl/errors.hpp"
#include "fracsl/threads.hpp"

namespace fracsl {

namespace {

// (i/n)^α from the integer ratio: exactly 0 at i = 0 and exactly 1 at i = n,
// which is what collapses the boundary rows.
double boundary_shape(std::size_t i, std::size_t n, double alpha) {
    return std::pow(static_cast<double>(i) / static_cast<double>(n), alpha);
}

void fill_row(const ProblemSpec& spec, std::size_t n, const CompositionMatrix& a,
              std::span<const double> colfac, std::size_t i, std::span<double> row,
              double& rhs) {
    const double s = boundary_shape(i, n, spec.alpha);
    for (std::size_t k = 0; k <= n; ++k) {
        const double base = (i == k) ? 1.0 : 0.0;
        row[k] = base + colfac[k] * (a(i, k) - s * a(n, k));
    }
    rhs = s * spec.L;
}

}  // namespace

std::vector<double> potential_on_grid(const PotentialExpr& q, const UniformGrid& grid) {
    std::vector<double> values(grid.point_count());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double t = grid.node(i);
        auto r = eval_potential(q, t);
        if (!r) {
            std::ostringstream msg;
            msg << "potential evaluation failed at node " << i << " (t = " << t
                << "): " << to_string(r.error().kind);
            throw PotentialError(i, t, msg.str());
        }
        values[i] = r.value();
    }
    return values;
}

void unreduced_row(const ProblemSpec& spec, const UniformGrid& grid,
                   const CompositionMatrix& composition,
                   std::span<const double> potential_values, std::size_t i,
                   std::span<double> row_out, double& rhs_out) {
    const std::size_t n = grid.intervals();
    if (composition.point_count() != n + 1 || potential_values.size() != n + 1 ||
        row_out.size() != n + 1 || i > n)
        throw std::invalid_argument("unreduced_row: dimension mismatch");
    std::vector<double> colfac(n + 1);
    for (std::size_t k = 0; k <= n; ++k) colfac[k] = spec.lambda + potential_values[k];
    fill_row(spec, n, composition, colfac, i, row_out, rhs_out);
}

LinearSystem assemble(const ProblemSpec& spec, const UniformGrid& grid,
                      const CompositionMatrix& composition) {
    validate(spec);
    const std::size_t n = grid.intervals();
    if (composition.point_count() != n + 1)
        throw std::invalid_argument("assemble: composition matrix built for a different grid");

    const std::vector<double> q = potential_on_grid(spec.potential, grid);
    std::vector<double> colfac(n + 1);
    for (std::size_t k = 0; k <= n; ++k) colfac[k] = spec.lambda + q[k];

    LinearSystem sys{Matrix(n + 1, n + 1), std::vector<double>(n + 1), grid};
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n) + 1;

#pragma omp parallel for schedule(static) num_threads(fracsl::max_threads())
    for (std::ptrdiff_t is = 0; is < count; ++is) {
        const auto i = static_cast<std::size_t>(is);
        fill_row(spec, n, composition, colfac, i, sys.matrix.row(i), sys.rhs[i]);
    }

    // Regression guard: the generic formula must already collapse rows 0
    // and n to the unit rows before we overwrite them.
    for (std::size_t k = 0; k <= n; ++k) {
        const double d0 = std::abs(sys.matrix(0, k) - (k == 0 ? 1.0 : 0.0));
        const double dn = std::abs(sys.matrix(n, k) - (k == n ? 1.0 : 0.0));
        if (d0 > 1e-14 || dn > 1e-14)
            throw std::logic_error("assemble: boundary row failed to reduce to a unit row");
    }
    if (std::abs(sys.rhs[0]) > 1e-14 ||
        std::abs(sys.rhs[n] - spec.L) > 1e-14 * std::max(1.0, std::abs(spec.L)))
        throw std::logic_error("assemble: boundary rhs failed to reduce");

    for (std::size_t k = 0; k <= n; ++k) {
        sys.matrix(0, k) = (k == 0) ? 1.0 : 0.0;
        sys.matrix(n, k) = (k == n) ? 1.0 : 0.0;
    }
    sys.rhs[0] = 0.0;
    sys.rhs[n] = spec.L;
    return sys;
}

}  // namespace fracsl
