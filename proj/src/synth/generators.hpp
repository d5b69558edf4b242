#ifndef ADLAB_SYNTH_GENERATORS_HPP
#define ADLAB_SYNTH_GENERATORS_HPP

#include <cstdint>
#include <utility>

#include "core/matrix.hpp"
#include "core/rng.hpp"

namespace adlab::synth {

// x1 ~ U(−a, a), x2 = x1². Linearly uncorrelated but fully dependent.
Matrix gen_quadratic_pair(std::size_t n, double a, std::uint64_t seed);

// Latents v1, v2 ~ U(−√3, √3) (unit variance); observations
// x = [5·v1, 3·cos(2π·v1/√3), v2]. Returns (latents n×2, observations n×3).
std::pair<Matrix, Matrix> gen_pica_observations(std::size_t n, std::uint64_t seed);

// x1, x2 ~ U(0,1) independent, x3 = frac(x1 + x2): pairwise independent,
// mutually dependent.
Matrix gen_pairwise_not_mutual(std::size_t n, std::uint64_t seed);

// dim-dimensional Gaussian with a fixed seeded mixing matrix, so the
// coordinates carry substantial linear correlation. The mixing depends
// only on (seed, dim), not on n, so successive draws extend the same
// distribution.
Matrix gen_correlated_gaussian(std::size_t n, std::size_t dim, std::uint64_t seed);
// Same distribution, drawing from a caller-owned stream (for minibatch
// sampling inside training loops).
Matrix sample_correlated_gaussian(std::size_t n, std::size_t dim, std::uint64_t seed, Rng& rng);

} // namespace adlab::synth

#endif
