#include "synth/generators.hpp"

#include <cmath>

#include "core/error.hpp"

namespace adlab::synth {

Matrix gen_quadratic_pair(std::size_t n, double a, std::uint64_t seed) {
    if (n < 4) throw ConfigError("gen_quadratic_pair: need n >= 4");
    if (a <= 0.0) throw ConfigError("gen_quadratic_pair: need a > 0");
    Rng rng(seed, streams::kData);
    Matrix m(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = rng.uniform(-a, a);
        m(i, 0) = x;
        m(i, 1) = x * x;
    }
    return m;
}

std::pair<Matrix, Matrix> gen_pica_observations(std::size_t n, std::uint64_t seed) {
    if (n < 4) throw ConfigError("gen_pica_observations: need n >= 4");
    Rng rng(seed, streams::kData);
    const double s3 = std::sqrt(3.0);
    Matrix latents(n, 2), obs(n, 3);
    for (std::size_t i = 0; i < n; ++i) {
        const double v1 = rng.uniform(-s3, s3);
        const double v2 = rng.uniform(-s3, s3);
        latents(i, 0) = v1;
        latents(i, 1) = v2;
        obs(i, 0) = 5.0 * v1;
        obs(i, 1) = 3.0 * std::cos(2.0 * M_PI * v1 / s3);
        obs(i, 2) = v2;
    }
    return {std::move(latents), std::move(obs)};
}

Matrix gen_pairwise_not_mutual(std::size_t n, std::uint64_t seed) {
    if (n < 4) throw ConfigError("gen_pairwise_not_mutual: need n >= 4");
    Rng rng(seed, streams::kData);
    Matrix m(n, 3);
    for (std::size_t i = 0; i < n; ++i) {
        const double x1 = rng.next_double();
        const double x2 = rng.next_double();
        const double s = x1 + x2;
        m(i, 0) = x1;
        m(i, 1) = x2;
        m(i, 2) = s - std::floor(s);
    }
    return m;
}

namespace {

// Mixing matrix A = I + 0.8·U with U uniform in ±1, fixed by (seed, dim).
Matrix mixing_matrix(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed, streams::kData + 101);
    Matrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            a(i, j) = (i == j ? 1.0 : 0.0) + 0.8 * rng.uniform(-1.0, 1.0);
    return a;
}

} // namespace

Matrix sample_correlated_gaussian(std::size_t n, std::size_t dim, std::uint64_t seed, Rng& rng) {
    const Matrix a = mixing_matrix(dim, seed);
    Matrix g(n, dim);
    for (double& v : g.data()) v = rng.normal();
    return matmul_bt(g, a);
}

Matrix gen_correlated_gaussian(std::size_t n, std::size_t dim, std::uint64_t seed) {
    if (n < 4) throw ConfigError("gen_correlated_gaussian: need n >= 4");
    if (dim < 2) throw ConfigError("gen_correlated_gaussian: need dim >= 2");
    Rng rng(seed, streams::kData);
    return sample_correlated_gaussian(n, dim, seed, rng);
}

} // namespace adlab::synth
