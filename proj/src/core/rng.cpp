#include "core/rng.hpp"

#include <cmath>

namespace adlab {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    // Decorrelate streams before expanding the state; splitmix64's avalanche
    // makes nearby (seed, stream) pairs produce unrelated states.
    std::uint64_t s = seed ^ (stream * 0xD2B74407B1CE6E93ull + 0x8BB84B93962EACC9ull);
    for (auto& w : state_) w = splitmix64(s);
    // All-zero state is invalid for xoshiro.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] so the log is finite.
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    // Lemire's multiply-shift; bias is negligible for the bounds used here
    // and the mapping is platform-stable, which is what matters.
    const unsigned __int128 product = static_cast<unsigned __int128>(next_u64()) * bound;
    return static_cast<std::uint64_t>(product >> 64);
}

std::vector<double> Rng::uniform_vec(std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (auto& v : out) v = uniform(lo, hi);
    return out;
}

std::vector<double> Rng::normal_vec(std::size_t n) {
    std::vector<double> out(n);
    for (auto& v : out) v = normal();
    return out;
}

} // namespace adlab
