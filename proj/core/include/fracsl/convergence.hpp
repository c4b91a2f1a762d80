#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracsl/problem.hpp"

namespace fracsl {

/// Fraction of the domain at which solutions are probed, kept exact so the
/// probe always lands on a grid node. Reduced on construction; must lie in
/// (0, 1).
struct ProbeFraction {
    ProbeFraction(long numerator, long denominator);

    long num;
    long den;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    /// Node index on a grid of n intervals; requires den | n.
    std::size_t node_index(std::size_t n) const;
};

/// Solution values at one probe node over a ladder of halving steps,
/// with the difference ratios R and empirical rates p. rates[k] (and
/// ratios[k]) belong to ladder level k+1, the middle of the three levels
/// that produced them.
struct ConvergenceRecord {
    struct Level {
        std::size_t intervals;
        double dt;
        double value;
    };

    ProbeFraction probe{1, 2};
    std::vector<Level> ladder;    // coarse to fine, dt strictly halving
    std::vector<double> ratios;   // size = max(ladder.size() − 2, 0)
    std::vector<double> rates;    // same size as ratios
};

/// p(Δt) = log₂[(f(Δt) − f(2Δt)) / (f(Δt/2) − f(Δt))] for each interior
/// level of a coarse-to-fine ladder of values at one physical node.
/// Requires ≥ 3 values. Throws DegenerateLadderError when a denominator
/// magnitude falls below 1e−15·max|f| or the ratio is non-positive.
std::vector<double> rate_from_ladder(std::span<const double> values);

/// Solve the problem at every n in n_list (strictly doubling), extract f
/// at each probe node (exact index, never interpolated), and estimate
/// rates. Every n must be divisible by every probe denominator.
std::vector<ConvergenceRecord> run_study(const ProblemSpec& spec,
                                         std::span<const std::size_t> n_list,
                                         std::span<const ProbeFraction> probes);

}  // namespace fracsl
