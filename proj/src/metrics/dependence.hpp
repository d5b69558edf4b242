#ifndef ADLAB_METRICS_DEPENDENCE_HPP
#define ADLAB_METRICS_DEPENDENCE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "core/matrix.hpp"

namespace adlab::metrics {

// Sample Pearson correlation. Throws DegenerateInputError when either
// input has zero variance; aggregating callers map that to 0 plus a flag.
double pearson(std::span<const double> x, std::span<const double> y);

// Empirical distance correlation between the rows of x (n×p) and y (n×q),
// the V-statistic estimator: pairwise Euclidean distance matrices, double
// centering, dCov² = (1/n²)·Σ A∘B and R² = dCov²/sqrt(dVar²(x)·dVar²(y)),
// with R = 0 whenever either dVar² vanishes. Distances are recomputed
// per pass so memory stays O(n); supported range n ≤ 8192.
double dcorr(const Matrix& x, const Matrix& y);
double dcorr(std::span<const double> x, std::span<const double> y);

// Unbiased sample covariance (n−1 normalization), d×d symmetric.
Matrix covariance_matrix(const Matrix& z);

struct CorrSummary {
    double mean_abs_offdiag_pearson = 0.0;
    double mean_sq_dcorr = 0.0;
    std::vector<double> per_dim_dcorr; // R(z_i, z_{-i}) for each i
    std::size_t degenerate_columns = 0;
};

// Mean |Pearson| over unordered column pairs plus the per-dimension
// one-vs-rest distance correlations. Constant columns contribute 0 to
// every pair and bump the degeneracy count.
CorrSummary corr_summary(const Matrix& z);

// Mean |Pearson| over unordered column pairs only (the cheap per-step
// training metric; corr_summary is the periodic full version).
double mean_abs_offdiag_pearson(const Matrix& z, std::size_t* degenerate_out = nullptr);

// Full pairwise matrices for reporting.
Matrix pearson_matrix(const Matrix& z);
Matrix dcorr_matrix(const Matrix& z);

} // namespace adlab::metrics

#endif
