#pragma once

#include <cstdint>
#include <random>

#include "vblast/linalg.hpp"

namespace vblast {

/// Seeded random stream. Distinct (seed, stream_id) pairs give independent
/// streams; identical pairs reproduce the exact same sample sequence.
/// Gaussian samples come from a Box-Muller transform over explicitly
/// constructed 53-bit uniforms, so the sequence is pinned by the mt19937_64
/// engine alone and does not depend on library distribution internals.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double next_unit();

    /// Standard normal N(0, 1).
    double next_gaussian();

    /// Circularly symmetric complex Gaussian CN(0, var):
    /// real and imaginary parts are independent N(0, var/2).
    Complex next_cn(double var);

    /// One fair bit, consumed 64 at a time from the engine word stream.
    int next_bit();

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    double spare_gaussian_ = 0.0;
    bool has_spare_ = false;
    std::uint64_t bit_buffer_ = 0;
    int bits_left_ = 0;
};

}  // namespace vblast
