#include "vblast/rng.hpp"

#include <cmath>

namespace vblast {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    // seed_seq consumes 32-bit words, so split both 64-bit inputs.
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32)};
    engine_.seed(seq);
}

double RngStream::next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_gaussian_;
    }
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_gaussian_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex RngStream::next_cn(double var) {
    const double s = std::sqrt(var / 2.0);
    const double re = next_gaussian();
    const double im = next_gaussian();
    return Complex(s * re, s * im);
}

int RngStream::next_bit() {
    if (bits_left_ == 0) {
        bit_buffer_ = engine_();
        bits_left_ = 64;
    }
    const int bit = static_cast<int>(bit_buffer_ & 1u);
    bit_buffer_ >>= 1;
    --bits_left_;
    return bit;
}

}  // namespace vblast
