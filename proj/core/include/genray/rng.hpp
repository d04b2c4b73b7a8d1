#pragma once

#include <cstdint>
#include <random>

namespace genray {

/// Seed descriptor for a reproducible substream: identical
/// (master_seed, stream_id) pairs always reproduce the same variate
/// sequence, and distinct stream ids give statistically independent streams.
struct RngStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
};

/// Stateful variate source for one stream. Not safe to share across
/// concurrent callers; derive one stream per worker instead.
class VariateGenerator {
public:
    explicit VariateGenerator(RngStream stream);

    // Uniform on the open interval (0, 1); never returns an endpoint.
    double uniform01();
    // Uniform on (0, hi).
    double uniform(double hi) { return hi * uniform01(); }
    // Standard exponential.
    double exponential();
    // Standard normal (polar method).
    double normal();

    RngStream stream() const noexcept { return stream_; }

private:
    RngStream stream_;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace genray
