#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracsl/grid.hpp"
#include "fracsl/matrix.hpp"

namespace fracsl {

/// m^α with the limit convention 0^α := 0 (α > 0).
double index_power(std::size_t m, double alpha);

/// Trapezoid-type weight w_{i,j} of the discrete left fractional integral,
/// (Δt)^α/(2Γ(α+1)) · {0 | i^α−(i−1)^α | (i−j+1)^α−(i−j−1)^α | 1} for
/// {i=j=0 | j=0<i | 0<j<i | j=i>0}. Requires j ≤ i.
double left_weight(std::size_t i, std::size_t j, double alpha, double dt);

/// Mirror family v_{i,j} of the discrete right fractional integral.
/// Requires i ≤ j ≤ n. Satisfies v_{i,j} == w_{n−i,n−j} bitwise.
double right_weight(std::size_t i, std::size_t j, double alpha, double dt,
                    std::size_t n);

/// Both triangular weight families for one (α, grid) pair, plus the common
/// prefactor. All stored weights are ≥ 0; w_{0,0} = v_{n,n} = 0.
class WeightSet {
public:
    static WeightSet build(double alpha, const UniformGrid& grid);

    double alpha() const noexcept { return alpha_; }
    const UniformGrid& grid() const noexcept { return grid_; }

    /// (Δt)^α / (2Γ(α+1)).
    double scale() const noexcept { return scale_; }

    /// w_{i,j}; requires 0 ≤ j ≤ i ≤ n.
    double left(std::size_t i, std::size_t j) const;

    /// v_{i,j}; requires i ≤ j ≤ n.
    double right(std::size_t i, std::size_t j) const;

    /// Row i of the left family: w_{i,0..i}, contiguous.
    std::span<const double> left_row(std::size_t i) const noexcept;

    /// Column k of the right family: v_{0..k,k}, contiguous.
    std::span<const double> right_column(std::size_t k) const noexcept;

private:
    WeightSet(double alpha, const UniformGrid& grid) : alpha_(alpha), grid_(grid) {}

    static std::size_t row_offset(std::size_t i) noexcept { return i * (i + 1) / 2; }

    double alpha_;
    UniformGrid grid_;
    double scale_ = 0.0;
    std::vector<double> left_;        // packed rows, row i holds j = 0..i
    std::vector<double> right_cols_;  // packed columns, column k holds i = 0..k
};

/// Dense discrete form A of the composed operator I_{0+}^α I_{b−}^α:
/// A_{i,k} = Σ_{j=0}^{min(i,k)} w_{i,j} v_{j,k}. Row 0 is identically zero
/// and every entry is ≥ 0.
class CompositionMatrix {
public:
    CompositionMatrix() = default;

    std::size_t point_count() const noexcept { return entries_.rows(); }
    double operator()(std::size_t i, std::size_t k) const noexcept { return entries_(i, k); }
    const Matrix& entries() const noexcept { return entries_; }

    std::vector<double> apply(std::span<const double> phi) const;

private:
    explicit CompositionMatrix(Matrix entries) : entries_(std::move(entries)) {}
    Matrix entries_;

    friend CompositionMatrix composition_matrix(const WeightSet& weights);
};

/// g_i = Σ_{j≤i} φ_j w_{i,j}, the left fractional integral of the node
/// values φ; g_0 = 0 always. Requires phi.size() == n+1.
std::vector<double> apply_left_integral(std::span<const double> phi,
                                        const WeightSet& weights);

/// g_i = Σ_{j≥i} φ_j v_{i,j}; g_n = 0 always.
std::vector<double> apply_right_integral(std::span<const double> phi,
                                         const WeightSet& weights);

/// Triangular product A = W·V. Inner index j ascends; each entry is
/// accumulated in long double (the widest hardware float) so the result
/// does not depend on how rows are scheduled across workers.
CompositionMatrix composition_matrix(const WeightSet& weights);

}  // namespace fracsl
