#include "fracsl/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracsl {

UniformGrid UniformGrid::with_intervals(std::size_t intervals, double length) {
    if (intervals < 2)
        throw std::domain_error("grid needs at least 2 intervals, got " +
                                std::to_string(intervals));
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::domain_error("grid length must be positive and finite");
    return UniformGrid(intervals, length, length / static_cast<double>(intervals));
}

std::vector<double> UniformGrid::nodes() const {
    std::vector<double> out(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) out[i] = node(i);
    return out;
}

UniformGrid make_grid(std::size_t intervals, double length) {
    return UniformGrid::with_intervals(intervals, length);
}

}  // namespace fracsl
