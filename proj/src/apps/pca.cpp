#include "apps/pca.hpp"

#include "apps/jacobi.hpp"
#include "core/error.hpp"
#include "metrics/dependence.hpp"

namespace adlab::apps {

PcaResult pca_svd(const Matrix& x, std::size_t d) {
    const std::size_t l = x.cols();
    if (d == 0 || d > l) throw ConfigError("pca_svd: need 0 < d <= input dim");
    if (l > 8) throw ConfigError("pca_svd: supports input dim <= 8");
    const Matrix cov = metrics::covariance_matrix(x);
    const EigenDecomposition eig = jacobi_eigen_symmetric(cov);
    PcaResult out;
    out.w = Matrix(l, d);
    out.explained_variance = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        out.explained_variance += eig.values[k];
        for (std::size_t i = 0; i < l; ++i) out.w(i, k) = eig.vectors(i, k);
    }
    return out;
}

} // namespace adlab::apps
