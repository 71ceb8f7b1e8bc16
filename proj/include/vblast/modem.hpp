#pragma once

#include <cstdint>
#include <vector>

#include "vblast/linalg.hpp"

namespace vblast {

enum class Modulation { BPSK, QPSK, QAM16 };

/// Bits per symbol: 1, 2 or 4.
int bits_per_symbol(Modulation mod);

const char* modulation_name(Modulation mod);

using BitBlock = std::vector<std::uint8_t>;

/// A modulation alphabet with Gray bit labels and unit average symbol energy.
/// points[i] carries the k-bit label labels[i]; bit 0 of a label is the first
/// bit of the k-bit group (most significant in the packed value).
struct Constellation {
    Modulation modulation;
    std::vector<Complex> points;
    std::vector<unsigned> labels;

    int k() const { return bits_per_symbol(modulation); }
    std::size_t size() const { return points.size(); }
};

/// Fixed conventions:
///   BPSK   {+1, -1} labeled {0, 1}.
///   QPSK   (±1±i)/√2, first bit selects the real sign, second the imaginary
///          sign, 0 -> +.
///   16-QAM per-axis levels {+3,+1,-1,-3}/√10 with the 2-bit Gray code
///          00->+3, 01->+1, 11->-1, 10->-3 on each axis; the first two bits
///          of a group drive the real axis.
Constellation build_constellation(Modulation mod);

/// Map consecutive k-bit groups to constellation points.
ComplexVector modulate(const BitBlock& bits, const Constellation& c);

/// Index of the nearest constellation point in Euclidean distance;
/// ties break toward the lowest point index.
std::size_t slice_symbol(Complex s, const Constellation& c);

/// Nearest-point hard decisions, concatenating the winning labels.
BitBlock demodulate_hard(const ComplexVector& symbols, const Constellation& c);

/// Bits of the label of points[index], first bit first.
void append_label_bits(const Constellation& c, std::size_t index, BitBlock& out);

}  // namespace vblast
