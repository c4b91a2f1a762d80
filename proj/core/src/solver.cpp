#include "fracsl/solver.hpp"

#include <utility>

#include "fracsl/assembly.hpp"
#include "fracsl/lup.hpp"
#include "fracsl/quadrature.hpp"

namespace fracsl {

Solution solve_bvp(const ProblemSpec& spec, std::size_t intervals) {
    validate(spec);
    const UniformGrid grid = make_grid(intervals, spec.b);

    CompositionMatrix composition;
    {
        // weight tables are only needed to form the composition
        const WeightSet weights = WeightSet::build(spec.alpha, grid);
        composition = composition_matrix(weights);
    }

    LinearSystem system = assemble(spec, grid, composition);
    composition = CompositionMatrix();

    const LupFactors factors = lup_decompose(std::move(system.matrix));
    std::vector<double> values = lup_solve(factors, system.rhs);
    return Solution{grid, std::move(values)};
}

}  // namespace fracsl
