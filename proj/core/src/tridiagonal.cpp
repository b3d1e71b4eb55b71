#include "paultrap/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "paultrap/errors.hpp"

namespace paultrap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// LU factorization of a general tridiagonal matrix with partial pivoting
// (row interchanges introduce a second superdiagonal).
class TridiagonalLU {
public:
    TridiagonalLU(std::span<const double> diagonal, std::span<const double> off_diagonal,
                  double shift, double tiny_pivot)
        : d_(diagonal.begin(), diagonal.end()),
          dl_(off_diagonal.begin(), off_diagonal.end()),
          du_(off_diagonal.begin(), off_diagonal.end()),
          du2_(d_.size() > 2 ? d_.size() - 2 : 0, 0.0),
          swapped_(d_.size(), false) {
        const std::size_t n = d_.size();
        for (auto& v : d_) v -= shift;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d_[i]) >= std::abs(dl_[i])) {
                if (d_[i] == 0.0) d_[i] = tiny_pivot;
                const double fact = dl_[i] / d_[i];
                dl_[i] = fact;
                d_[i + 1] -= fact * du_[i];
            } else {
                const double fact = d_[i] / dl_[i];
                d_[i] = dl_[i];
                dl_[i] = fact;
                const double temp = du_[i];
                du_[i] = d_[i + 1];
                d_[i + 1] = temp - fact * d_[i + 1];
                if (i + 2 < n) {
                    du2_[i] = du_[i + 1];
                    du_[i + 1] = -fact * du_[i + 1];
                }
                swapped_[i] = true;
            }
        }
        if (n > 0 && d_[n - 1] == 0.0) d_[n - 1] = tiny_pivot;
    }

    void solve(std::vector<double>& b) const {
        const std::size_t n = d_.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!swapped_[i]) {
                b[i + 1] -= dl_[i] * b[i];
            } else {
                const double temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl_[i] * b[i];
            }
        }
        b[n - 1] /= d_[n - 1];
        if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
        for (std::size_t i = n >= 3 ? n - 2 : 0; i-- > 0;) {
            b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
        }
    }

private:
    std::vector<double> d_, dl_, du_, du2_;
    std::vector<bool> swapped_;
};

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void normalize(std::vector<double>& v) {
    const double norm = std::sqrt(dot(v, v));
    for (auto& x : v) x /= norm;
}

}  // namespace

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diagonal,
                                           std::vector<double> off_diagonal)
    : diagonal_(std::move(diagonal)), off_diagonal_(std::move(off_diagonal)) {
    if (diagonal_.empty()) {
        throw DomainError("tridiagonal matrix must have at least one row");
    }
    if (off_diagonal_.size() + 1 != diagonal_.size()) {
        throw DomainError("off-diagonal length must be N-1 (N = " +
                          std::to_string(diagonal_.size()) + ", got " +
                          std::to_string(off_diagonal_.size()) + ")");
    }
    off_diagonal_sq_.resize(off_diagonal_.size());
    std::transform(off_diagonal_.begin(), off_diagonal_.end(), off_diagonal_sq_.begin(),
                   [](double e) { return e * e; });
    const auto [lo, hi] = gershgorin_bounds();
    norm_bound_ = std::max(std::abs(lo), std::abs(hi));
}

std::pair<double, double> SymmetricTridiagonal::gershgorin_bounds() const {
    const std::size_t n = diagonal_.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(off_diagonal_[i - 1]);
        if (i + 1 < n) radius += std::abs(off_diagonal_[i]);
        lo = std::min(lo, diagonal_[i] - radius);
        hi = std::max(hi, diagonal_[i] + radius);
    }
    return {lo, hi};
}

int SymmetricTridiagonal::sturm_count(double shift) const {
    // Signs of the LDL^T pivots of T - shift I.
    const double pivmin = std::max(std::numeric_limits<double>::min(), kEps * kEps * norm_bound_);
    int count = 0;
    double q = diagonal_[0] - shift;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diagonal_.size(); ++i) {
        q = diagonal_[i] - shift - off_diagonal_sq_[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

double SymmetricTridiagonal::eigenvalue(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= size()) {
        throw DomainError("eigenvalue index " + std::to_string(k) + " out of range for size " +
                          std::to_string(size()));
    }
    auto [lo, hi] = gershgorin_bounds();
    const double pad = kEps * std::max(1.0, norm_bound_);
    lo -= pad;
    hi += pad;
    // Invariant: count(lo) <= k < count(hi).
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
        if (sturm_count(mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> SymmetricTridiagonal::lowest_eigenvalues(int count) const {
    std::vector<double> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) out.push_back(eigenvalue(k));
    return out;
}

std::vector<double> SymmetricTridiagonal::multiply(std::span<const double> x) const {
    const std::size_t n = size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = diagonal_[i] * x[i];
        if (i > 0) s += off_diagonal_[i - 1] * x[i - 1];
        if (i + 1 < n) s += off_diagonal_[i] * x[i + 1];
        y[i] = s;
    }
    return y;
}

SymmetricTridiagonal::EigenvectorResult SymmetricTridiagonal::eigenvector(
    double eigenvalue, std::span<const std::vector<double>> deflate, int max_iterations) const {
    const std::size_t n = size();
    const TridiagonalLU lu(diagonal_, off_diagonal_, eigenvalue, kEps * std::max(1.0, norm_bound_));

    // Fixed seed keeps the starting vector, and therefore the result, reproducible.
    std::mt19937_64 rng(0x5eed1234abcdULL);
    std::uniform_real_distribution<double> dist(0.5, 1.5);
    std::vector<double> x(n);
    for (auto& v : x) v = dist(rng);
    normalize(x);

    auto orthogonalize = [&](std::vector<double>& v) {
        for (const auto& u : deflate) {
            const double c = dot(v, u);
            for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
        }
    };

    EigenvectorResult result;
    for (int iter = 1; iter <= max_iterations; ++iter) {
        std::vector<double> y = x;
        lu.solve(y);
        orthogonalize(y);
        normalize(y);
        const double overlap = std::abs(dot(x, y));
        x = std::move(y);
        result.iterations = iter;
        if (iter >= 2 && 1.0 - overlap < 1e-14) {
            result.converged = true;
            break;
        }
    }
    result.vector = std::move(x);
    return result;
}

}  // namespace paultrap
