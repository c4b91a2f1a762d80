#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracsl/matrix.hpp"

namespace fracsl {

/// Pivot magnitudes below this fraction of the input's largest entry are
/// declared singular.
inline constexpr double singular_pivot_epsilon = 1e-13;

/// Doolittle LU factors with row partial pivoting, stored combined
/// (unit-diagonal L strictly below, U on and above the diagonal).
/// Immutable once built; safe to share across concurrent solves.
class LupFactors {
public:
    std::size_t size() const noexcept { return lu_.rows(); }

    const Matrix& combined() const noexcept { return lu_; }

    /// perm[i] is the input row that ended up in pivot position i.
    std::span<const std::size_t> permutation() const noexcept { return perm_; }

    /// +1 for an even number of row swaps, −1 for odd.
    int permutation_sign() const noexcept { return sign_; }

private:
    LupFactors() = default;

    Matrix lu_;
    std::vector<std::size_t> perm_;
    int sign_ = 1;

    friend LupFactors lup_decompose(Matrix matrix);
    friend std::vector<double> lup_solve(const LupFactors& factors,
                                         std::span<const double> rhs);
};

/// Factor a square matrix in place (takes ownership; pass a copy to keep
/// the original for residual checks). Throws SingularMatrixError naming
/// the elimination column when a pivot falls below the threshold.
LupFactors lup_decompose(Matrix matrix);

/// Forward/back substitution.
std::vector<double> lup_solve(const LupFactors& factors, std::span<const double> rhs);

}  // namespace fracsl
