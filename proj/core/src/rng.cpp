#include "genray/rng.hpp"

#include <cmath>

namespace genray {

namespace {

// splitmix64 step; spreads (master_seed, stream_id) into decorrelated
// seed material for the engine.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 make_engine(RngStream s) {
    std::uint64_t state = s.master_seed;
    const std::uint64_t w0 = splitmix64(state);
    state ^= s.stream_id * 0xda942042e4dd58b5ULL;
    const std::uint64_t w1 = splitmix64(state);
    const std::uint64_t w2 = splitmix64(state);
    const std::uint64_t w3 = splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(w0), static_cast<std::uint32_t>(w0 >> 32),
                      static_cast<std::uint32_t>(w1), static_cast<std::uint32_t>(w1 >> 32),
                      static_cast<std::uint32_t>(w2), static_cast<std::uint32_t>(w2 >> 32),
                      static_cast<std::uint32_t>(w3), static_cast<std::uint32_t>(w3 >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

VariateGenerator::VariateGenerator(RngStream stream)
    : stream_(stream), engine_(make_engine(stream)) {}

double VariateGenerator::uniform01() {
    // 53-bit mantissa, offset half a step: strictly inside (0, 1).
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double VariateGenerator::exponential() { return -std::log(uniform01()); }

double VariateGenerator::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

}  // namespace genray
