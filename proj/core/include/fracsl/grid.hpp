#pragma once

#include <cstddef>
#include <vector>

namespace fracsl {

/// Homogeneous grid t_i = i·Δt on [0, b] with Δt = b/n. Immutable.
///
/// Nodes are computed by multiplication (never accumulated) and the last
/// node is pinned to b, so t_0 == 0 and t_n == b hold bitwise.
class UniformGrid {
public:
    /// Requires intervals ≥ 2 and length > 0, else std::domain_error.
    static UniformGrid with_intervals(std::size_t intervals, double length);

    std::size_t intervals() const noexcept { return n_; }
    std::size_t point_count() const noexcept { return n_ + 1; }
    double length() const noexcept { return b_; }
    double step() const noexcept { return dt_; }

    double node(std::size_t i) const noexcept {
        return i == n_ ? b_ : static_cast<double>(i) * dt_;
    }

    std::vector<double> nodes() const;

private:
    UniformGrid(std::size_t n, double b, double dt) : n_(n), b_(b), dt_(dt) {}

    std::size_t n_;
    double b_;
    double dt_;
};

/// Convenience spelling of UniformGrid::with_intervals.
UniformGrid make_grid(std::size_t intervals, double length);

}  // namespace fracsl
