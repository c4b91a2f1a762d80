#pragma once

#include <cstddef>

#include "fracsl/problem.hpp"

namespace fracsl {

/// End-to-end solve on a grid of `intervals` subintervals: weight tables,
/// composition matrix, dense assembly, LUP factorization, substitution.
Solution solve_bvp(const ProblemSpec& spec, std::size_t intervals);

}  // namespace fracsl
