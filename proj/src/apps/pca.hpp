#ifndef ADLAB_APPS_PCA_HPP
#define ADLAB_APPS_PCA_HPP

#include <utility>

#include "core/matrix.hpp"

namespace adlab::apps {

struct PcaResult {
    Matrix w;                  // l×d, columns are the top-d eigenvectors
    double explained_variance; // sum of the top-d eigenvalues
};

// Classic PCA: eigendecomposition of the sample covariance (data centered
// internally). Intended for closed-world small inputs, d ≤ l ≤ 8.
PcaResult pca_svd(const Matrix& x, std::size_t d);

} // namespace adlab::apps

#endif
