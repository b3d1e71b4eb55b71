#pragma once

#include <span>
#include <vector>

namespace paultrap {

/// Real symmetric tridiagonal matrix with selective eigen-extraction:
/// Sturm-sequence bisection for eigenvalues and inverse iteration for
/// eigenvectors. Cost is O(N) per count or solve, so the k lowest pairs of a
/// large matrix come out in O(kN).
class SymmetricTridiagonal {
public:
    /// `off_diagonal` holds the N-1 couplings between consecutive rows.
    SymmetricTridiagonal(std::vector<double> diagonal, std::vector<double> off_diagonal);

    std::size_t size() const noexcept { return diagonal_.size(); }
    std::span<const double> diagonal() const noexcept { return diagonal_; }
    std::span<const double> off_diagonal() const noexcept { return off_diagonal_; }

    /// Number of eigenvalues strictly below `shift`.
    int sturm_count(double shift) const;

    /// k-th smallest eigenvalue (0-based), bisected to machine precision.
    double eigenvalue(int k) const;

    /// The `count` smallest eigenvalues in ascending order.
    std::vector<double> lowest_eigenvalues(int count) const;

    /// Gershgorin interval containing the whole spectrum.
    std::pair<double, double> gershgorin_bounds() const;

    struct EigenvectorResult {
        std::vector<double> vector;  ///< unit Euclidean norm
        int iterations = 0;
        bool converged = false;
    };

    /// Inverse iteration at `eigenvalue`, orthogonalized against `deflate`
    /// (each assumed unit norm).
    EigenvectorResult eigenvector(double eigenvalue,
                                  std::span<const std::vector<double>> deflate = {},
                                  int max_iterations = 12) const;

    /// y = T x
    std::vector<double> multiply(std::span<const double> x) const;

private:
    std::vector<double> diagonal_;
    std::vector<double> off_diagonal_;
    std::vector<double> off_diagonal_sq_;
    double norm_bound_ = 0.0;
};

}  // namespace paultrap
