#include "fracsl/lup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "fracsl/errors.hpp"
#include "fracsl/threads.hpp"

namespace fracsl {

LupFactors lup_decompose(Matrix matrix) {
    const std::size_t n = matrix.rows();
    if (n == 0 || matrix.cols() != n)
        throw std::invalid_argument("lup_decompose: matrix must be square and non-empty");
    for (double v : matrix.data())
        if (!std::isfinite(v))
            throw std::invalid_argument("lup_decompose: matrix has non-finite entries");

    double max_entry = 0.0;
    for (double v : matrix.data()) max_entry = std::max(max_entry, std::abs(v));
    const double tol = singular_pivot_epsilon * max_entry;

    LupFactors f;
    f.lu_ = std::move(matrix);
    f.perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.perm_[i] = i;

    Matrix& lu = f.lu_;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        double pivot_mag = std::abs(lu(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double mag = std::abs(lu(r, k));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        if (pivot_mag <= tol)
            throw SingularMatrixError(
                k, "singular matrix: pivot " + std::to_string(pivot_mag) +
                       " below threshold in elimination column " + std::to_string(k));
        if (pivot_row != k) {
            std::swap_ranges(lu.row(k).begin(), lu.row(k).end(), lu.row(pivot_row).begin());
            std::swap(f.perm_[k], f.perm_[pivot_row]);
            f.sign_ = -f.sign_;
        }

        const double pivot = lu(k, k);
        const std::ptrdiff_t first = static_cast<std::ptrdiff_t>(k) + 1;
        const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(n);
        // each row update is independent; worth distributing only while the
        // trailing block is still large
        const bool wide = (n - k) >= 128;

#pragma omp parallel for schedule(static) num_threads(fracsl::max_threads()) if (wide)
        for (std::ptrdiff_t is = first; is < last; ++is) {
            const auto i = static_cast<std::size_t>(is);
            const double m = lu(i, k) / pivot;
            lu(i, k) = m;
            const double* uk = &lu(k, k + 1);
            double* ui = &lu(i, k + 1);
            for (std::size_t j = 0; j < n - k - 1; ++j) ui[j] -= m * uk[j];
        }
    }
    return f;
}

std::vector<double> lup_solve(const LupFactors& f, std::span<const double> rhs) {
    const std::size_t n = f.size();
    if (rhs.size() != n)
        throw std::invalid_argument("lup_solve: rhs length " + std::to_string(rhs.size()) +
                                    " does not match system size " + std::to_string(n));
    const Matrix& lu = f.lu_;
    std::vector<double> x(n);

    // forward: L y = P rhs
    for (std::size_t i = 0; i < n; ++i) {
        double acc = rhs[f.perm_[i]];
        for (std::size_t j = 0; j < i; ++j) acc -= lu(i, j) * x[j];
        x[i] = acc;
    }
    // backward: U x = y
    for (std::size_t ii = n; ii-- > 0;) {
        double acc = x[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= lu(ii, j) * x[j];
        x[ii] = acc / lu(ii, ii);
    }
    return x;
}

}  // namespace fracsl
