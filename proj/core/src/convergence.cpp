#include "fracsl/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fracsl/errors.hpp"
#include "fracsl/solver.hpp"

namespace fracsl {

ProbeFraction::ProbeFraction(long numerator, long denominator) {
    if (denominator <= 0 || numerator <= 0 || numerator >= denominator)
        throw std::domain_error("probe fraction must lie strictly inside (0, 1)");
    const long g = std::gcd(numerator, denominator);
    num = numerator / g;
    den = denominator / g;
}

std::size_t ProbeFraction::node_index(std::size_t n) const {
    if (n % static_cast<std::size_t>(den) != 0)
        throw std::domain_error("probe " + std::to_string(num) + "/" + std::to_string(den) +
                                " does not land on a node of an n=" + std::to_string(n) +
                                " grid");
    return (n / static_cast<std::size_t>(den)) * static_cast<std::size_t>(num);
}

namespace {

struct RatesAndRatios {
    std::vector<double> ratios;
    std::vector<double> rates;
};

RatesAndRatios ladder_rates(std::span<const double> v) {
    RatesAndRatios out;
    if (v.size() < 3) return out;
    out.ratios.reserve(v.size() - 2);
    out.rates.reserve(v.size() - 2);
    for (std::size_t level = 1; level + 1 < v.size(); ++level) {
        const double numer = v[level] - v[level - 1];
        const double denom = v[level + 1] - v[level];
        const double scale =
            std::max({std::abs(v[level - 1]), std::abs(v[level]), std::abs(v[level + 1])});
        if (std::abs(denom) <= 1e-15 * scale)
            throw DegenerateLadderError(
                level, "degenerate ladder: vanishing denominator at level " +
                           std::to_string(level) + " (rate undefined)");
        const double ratio = numer / denom;
        if (!(ratio > 0.0))
            throw DegenerateLadderError(
                level, "degenerate ladder: non-positive difference ratio at level " +
                           std::to_string(level) + " (rate undefined)");
        out.ratios.push_back(ratio);
        out.rates.push_back(std::log2(ratio));
    }
    return out;
}

}  // namespace

std::vector<double> rate_from_ladder(std::span<const double> values) {
    if (values.size() < 3)
        throw std::domain_error("rate_from_ladder needs at least 3 consecutive ladder values");
    return ladder_rates(values).rates;
}

std::vector<ConvergenceRecord> run_study(const ProblemSpec& spec,
                                         std::span<const std::size_t> n_list,
                                         std::span<const ProbeFraction> probes) {
    validate(spec);
    if (n_list.empty()) throw std::domain_error("run_study: empty grid list");
    if (probes.empty()) throw std::domain_error("run_study: no probes");
    for (std::size_t k = 0; k + 1 < n_list.size(); ++k)
        if (n_list[k + 1] != 2 * n_list[k])
            throw std::domain_error("run_study: grid list must strictly double (" +
                                    std::to_string(n_list[k]) + " -> " +
                                    std::to_string(n_list[k + 1]) + ")");
    for (std::size_t n : n_list)
        for (const ProbeFraction& p : probes) (void)p.node_index(n);  // validates divisibility

    std::vector<ConvergenceRecord> records(probes.size());
    for (std::size_t pi = 0; pi < probes.size(); ++pi) {
        records[pi].probe = probes[pi];
        records[pi].ladder.reserve(n_list.size());
    }

    for (std::size_t n : n_list) {
        std::optional<Solution> sol;
        try {
            sol = solve_bvp(spec, n);
        } catch (const SingularMatrixError& e) {
            throw SingularMatrixError(e.column(), std::string(e.what()) +
                                                      " (while solving n = " +
                                                      std::to_string(n) + ")");
        } catch (const PotentialError& e) {
            throw PotentialError(e.node(), e.abscissa(),
                                 std::string(e.what()) + " (while solving n = " +
                                     std::to_string(n) + ")");
        }
        for (std::size_t pi = 0; pi < probes.size(); ++pi) {
            const std::size_t idx = probes[pi].node_index(n);
            records[pi].ladder.push_back({n, sol->grid.step(), sol->values[idx]});
        }
    }

    for (ConvergenceRecord& rec : records) {
        if (rec.ladder.size() < 3) continue;
        std::vector<double> v(rec.ladder.size());
        std::transform(rec.ladder.begin(), rec.ladder.end(), v.begin(),
                       [](const ConvergenceRecord::Level& l) { return l.value; });
        RatesAndRatios rr = ladder_rates(v);
        rec.ratios = std::move(rr.ratios);
        rec.rates = std::move(rr.rates);
    }
    return records;
}

}  // namespace fracsl
