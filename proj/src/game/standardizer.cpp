#include "game/standardizer.hpp"

#include <cmath>

#include "core/error.hpp"

namespace adlab::game {

Matrix Standardizer::forward(const Matrix& z) {
    const std::size_t n = z.rows(), d = z.cols();
    if (n < 2) throw ConfigError("standardize: need n >= 2");
    mu_.assign(d, 0.0);
    s_.assign(d, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = z.row(r);
        for (std::size_t c = 0; c < d; ++c) mu_[c] += row[c];
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (double& m : mu_) m *= inv_n;
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = z.row(r);
        for (std::size_t c = 0; c < d; ++c) {
            const double dv = row[c] - mu_[c];
            s_[c] += dv * dv;
        }
    }
    for (std::size_t c = 0; c < d; ++c) s_[c] = std::sqrt(s_[c] * inv_n + eps_);

    xhat_ = Matrix(n, d);
    for (std::size_t r = 0; r < n; ++r) {
        const auto src = z.row(r);
        auto dst = xhat_.row(r);
        for (std::size_t c = 0; c < d; ++c) dst[c] = (src[c] - mu_[c]) / s_[c];
    }
    return xhat_;
}

Matrix Standardizer::backward(const Matrix& upstream) const {
    require_same_shape(upstream, xhat_, "Standardizer::backward");
    const std::size_t n = upstream.rows(), d = upstream.cols();
    // Batch-norm backward:
    //   dx = (g − mean(g) − x̂ · mean(g∘x̂)) / s    per column.
    std::vector<double> g_mean(d, 0.0), gx_mean(d, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        const auto g = upstream.row(r);
        const auto xh = xhat_.row(r);
        for (std::size_t c = 0; c < d; ++c) {
            g_mean[c] += g[c];
            gx_mean[c] += g[c] * xh[c];
        }
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t c = 0; c < d; ++c) {
        g_mean[c] *= inv_n;
        gx_mean[c] *= inv_n;
    }
    Matrix dx(n, d);
    for (std::size_t r = 0; r < n; ++r) {
        const auto g = upstream.row(r);
        const auto xh = xhat_.row(r);
        auto out = dx.row(r);
        for (std::size_t c = 0; c < d; ++c)
            out[c] = (g[c] - g_mean[c] - xh[c] * gx_mean[c]) / s_[c];
    }
    return dx;
}

} // namespace adlab::game
