#ifndef ADLAB_CORE_RNG_HPP
#define ADLAB_CORE_RNG_HPP

#include <cstdint>
#include <vector>

namespace adlab {

// xoshiro256++ seeded through splitmix64. A (seed, stream) pair fully
// determines the sample sequence, independent of platform and standard
// library, so every consumer in a run draws from its own stream derived
// from the single run seed.
class Rng {
public:
    Rng() : Rng(0, 0) {}
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53 random bits.
    double next_double();
    double uniform(double lo, double hi);
    // Standard normal via Box-Muller; generates pairs, caches the spare.
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Uniform integer in [0, bound) by rejection-free 128-bit multiply.
    std::uint64_t next_below(std::uint64_t bound);

    std::vector<double> uniform_vec(std::size_t n, double lo, double hi);
    std::vector<double> normal_vec(std::size_t n);

private:
    std::uint64_t state_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Well-known stream ids so independent consumers never collide.
namespace streams {
inline constexpr std::uint64_t kData = 1;
inline constexpr std::uint64_t kEncoderInit = 2;
inline constexpr std::uint64_t kBankInit = 3;
inline constexpr std::uint64_t kTraining = 4;
inline constexpr std::uint64_t kEval = 5;
inline constexpr std::uint64_t kTaskInit = 6;
inline constexpr std::uint64_t kEmbed = 7;
inline constexpr std::uint64_t kNoise = 8;
} // namespace streams

} // namespace adlab

#endif
