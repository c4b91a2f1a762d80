#include "fracsl/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracsl/threads.hpp"

namespace fracsl {

namespace {

double weight_scale(double alpha, double dt) {
    return std::pow(dt, alpha) / (2.0 * std::tgamma(alpha + 1.0));
}

[[noreturn]] void index_fault(const char* what, std::size_t i, std::size_t j) {
    throw std::out_of_range(std::string(what) + ": index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside the triangular range");
}

}  // namespace

double index_power(std::size_t m, double alpha) {
    // pow keeps m^1 == m exact, which the α = 1 trapezoid degeneracy relies on
    return m == 0 ? 0.0 : std::pow(static_cast<double>(m), alpha);
}

double left_weight(std::size_t i, std::size_t j, double alpha, double dt) {
    if (j > i) index_fault("left_weight", i, j);
    if (i == 0) return 0.0;  // w_{0,0}
    const double scale = weight_scale(alpha, dt);
    if (j == 0) return scale * (index_power(i, alpha) - index_power(i - 1, alpha));
    if (j == i) return scale;
    return scale * (index_power(i - j + 1, alpha) - index_power(i - j - 1, alpha));
}

double right_weight(std::size_t i, std::size_t j, double alpha, double dt, std::size_t n) {
    if (i > j || j > n) index_fault("right_weight", i, j);
    if (i == n) return 0.0;  // v_{n,n}
    const double scale = weight_scale(alpha, dt);
    if (j == n) return scale * (index_power(n - i, alpha) - index_power(n - i - 1, alpha));
    if (j == i) return scale;
    return scale * (index_power(j - i + 1, alpha) - index_power(j - i - 1, alpha));
}

WeightSet WeightSet::build(double alpha, const UniformGrid& grid) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::domain_error("weight order alpha must lie in (0, 1]");

    WeightSet ws(alpha, grid);
    const std::size_t n = grid.intervals();
    ws.scale_ = weight_scale(alpha, grid.step());
    const double scale = ws.scale_;

    // one power per lag; identical bits to the per-index functions
    std::vector<double> p(n + 2);
    for (std::size_t m = 0; m <= n + 1; ++m) p[m] = index_power(m, alpha);

    ws.left_.resize(row_offset(n + 1));
    ws.right_cols_.resize(row_offset(n + 1));
    double* const w = ws.left_.data();
    double* const v = ws.right_cols_.data();
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n) + 1;

#pragma omp parallel for schedule(static) num_threads(fracsl::max_threads())
    for (std::ptrdiff_t is = 0; is < count; ++is) {
        const auto i = static_cast<std::size_t>(is);
        // left family, row i: w_{i,j} for j = 0..i
        double* wr = w + row_offset(i);
        if (i == 0) {
            wr[0] = 0.0;
        } else {
            wr[0] = scale * (p[i] - p[i - 1]);
            for (std::size_t j = 1; j < i; ++j) wr[j] = scale * (p[i - j + 1] - p[i - j - 1]);
            wr[i] = scale;
        }
        // right family, column k = i: v_{r,k} for r = 0..k
        double* vc = v + row_offset(i);
        const std::size_t k = i;
        if (k == n) {
            for (std::size_t r = 0; r < n; ++r) vc[r] = scale * (p[n - r] - p[n - r - 1]);
            vc[n] = 0.0;
        } else {
            for (std::size_t r = 0; r < k; ++r) vc[r] = scale * (p[k - r + 1] - p[k - r - 1]);
            vc[k] = scale;
        }
    }
    return ws;
}

double WeightSet::left(std::size_t i, std::size_t j) const {
    if (j > i || i > grid_.intervals()) index_fault("WeightSet::left", i, j);
    return left_[row_offset(i) + j];
}

double WeightSet::right(std::size_t i, std::size_t j) const {
    if (i > j || j > grid_.intervals()) index_fault("WeightSet::right", i, j);
    return right_cols_[row_offset(j) + i];
}

std::span<const double> WeightSet::left_row(std::size_t i) const noexcept {
    return {left_.data() + row_offset(i), i + 1};
}

std::span<const double> WeightSet::right_column(std::size_t k) const noexcept {
    return {right_cols_.data() + row_offset(k), k + 1};
}

std::vector<double> apply_left_integral(std::span<const double> phi, const WeightSet& ws) {
    const std::size_t n = ws.grid().intervals();
    if (phi.size() != n + 1)
        throw std::invalid_argument("apply_left_integral: phi has " +
                                    std::to_string(phi.size()) + " values, grid wants " +
                                    std::to_string(n + 1));
    std::vector<double> g(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        auto row = ws.left_row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j <= i; ++j) acc += phi[j] * row[j];
        g[i] = acc;
    }
    return g;
}

std::vector<double> apply_right_integral(std::span<const double> phi, const WeightSet& ws) {
    const std::size_t n = ws.grid().intervals();
    if (phi.size() != n + 1)
        throw std::invalid_argument("apply_right_integral: phi has " +
                                    std::to_string(phi.size()) + " values, grid wants " +
                                    std::to_string(n + 1));
    std::vector<double> g(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = i; j <= n; ++j) acc += phi[j] * ws.right_column(j)[i];
        g[i] = acc;
    }
    return g;
}

CompositionMatrix composition_matrix(const WeightSet& ws) {
    const std::size_t n = ws.grid().intervals();
    Matrix a(n + 1, n + 1);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n) + 1;

#pragma omp parallel for schedule(static) num_threads(fracsl::max_threads())
    for (std::ptrdiff_t is = 1; is < count; ++is) {  // row 0 stays zero: w_{0,0} = 0
        const auto i = static_cast<std::size_t>(is);
        const auto wrow = ws.left_row(i);
        auto out = a.row(i);
        for (std::size_t k = 0; k <= n; ++k) {
            const auto vcol = ws.right_column(k);
            const std::size_t m = i < k ? i : k;
            long double acc = 0.0L;
            for (std::size_t j = 0; j <= m; ++j)
                acc += static_cast<long double>(wrow[j]) * vcol[j];
            out[k] = static_cast<double>(acc);
        }
    }
    return CompositionMatrix(std::move(a));
}

std::vector<double> CompositionMatrix::apply(std::span<const double> phi) const {
    if (phi.size() != entries_.rows())
        throw std::invalid_argument("CompositionMatrix::apply: size mismatch");
    return multiply(entries_, phi);
}

}  // namespace fracsl
