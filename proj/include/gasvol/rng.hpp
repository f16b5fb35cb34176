#pragma once

#include <cstdint>
#include <random>

namespace gasvol {

/// Mixes a master seed with stream coordinates into an independent 64-bit seed
/// (splitmix64 finalizer applied per coordinate).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

/// Seedable generator used everywhere randomness enters the library.
///
/// Engine: std::mt19937_64. Normal variates use the Marsaglia polar method
/// with uniforms u = (next() >> 11) * 2^-53, so any reimplementation with the
/// same engine reproduces the stream exactly and any other engine reproduces
/// its moments.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace gasvol
