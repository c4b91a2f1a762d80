#pragma once

#include <span>
#include <vector>

#include "fracsl/grid.hpp"
#include "fracsl/matrix.hpp"
#include "fracsl/problem.hpp"
#include "fracsl/quadrature.hpp"

namespace fracsl {

/// Dense system M f = rhs discretizing the integral form of the problem.
/// Row 0 is the unit row e_0 with rhs 0; row n is e_n with rhs L.
struct LinearSystem {
    Matrix matrix;
    std::vector<double> rhs;
    UniformGrid grid;
};

/// q(t_i) for every node; throws PotentialError naming the failing node.
std::vector<double> potential_on_grid(const PotentialExpr& q, const UniformGrid& grid);

/// Row i of the system as the generic interior formula produces it, before
/// any boundary reduction:
///   row[k] = δ_{i,k} + (λ + q_k)·(A_{i,k} − (i/n)^α·A_{n,k}),
///   rhs    = (i/n)^α·L,
/// with (i/n)^α taken from the integer ratio so it is exact at i = 0, n.
/// Exposed so the analytic collapse of rows 0 and n can be checked.
void unreduced_row(const ProblemSpec& spec, const UniformGrid& grid,
                   const CompositionMatrix& composition,
                   std::span<const double> potential_values, std::size_t i,
                   std::span<double> row_out, double& rhs_out);

/// Assemble the full system. Rows 0 and n are first produced by the
/// generic formula and verified to collapse to the unit rows (≤ 1e−14),
/// then overwritten with exact unit rows so the solve cannot be perturbed
/// by rounding in the cancellation.
LinearSystem assemble(const ProblemSpec& spec, const UniformGrid& grid,
                      const CompositionMatrix& composition);

}  // namespace fracsl
