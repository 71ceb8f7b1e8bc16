#include "vblast/modem.hpp"

#include <cmath>
#include <limits>

namespace vblast {

int bits_per_symbol(Modulation mod) {
    switch (mod) {
        case Modulation::BPSK: return 1;
        case Modulation::QPSK: return 2;
        case Modulation::QAM16: return 4;
    }
    throw std::invalid_argument("bits_per_symbol: unknown modulation");
}

const char* modulation_name(Modulation mod) {
    switch (mod) {
        case Modulation::BPSK: return "bpsk";
        case Modulation::QPSK: return "qpsk";
        case Modulation::QAM16: return "qam16";
    }
    throw std::invalid_argument("modulation_name: unknown modulation");
}

namespace {

// 2-bit Gray code per axis: 00->+3, 01->+1, 11->-1, 10->-3.
double qam16_axis_level(unsigned two_bits) {
    switch (two_bits) {
        case 0b00: return 3.0;
        case 0b01: return 1.0;
        case 0b11: return -1.0;
        default: return -3.0;  // 0b10
    }
}

}  // namespace

Constellation build_constellation(Modulation mod) {
    Constellation c;
    c.modulation = mod;
    const int k = bits_per_symbol(mod);
    const std::size_t n = std::size_t(1) << k;
    c.points.resize(n);
    c.labels.resize(n);
    for (unsigned label = 0; label < n; ++label) c.labels[label] = label;

    switch (mod) {
        case Modulation::BPSK:
            c.points[0] = Complex(1.0, 0.0);
            c.points[1] = Complex(-1.0, 0.0);
            break;
        case Modulation::QPSK: {
            const double a = 1.0 / std::sqrt(2.0);
            for (unsigned label = 0; label < 4; ++label) {
                const double re = (label & 0b10) ? -a : a;
                const double im = (label & 0b01) ? -a : a;
                c.points[label] = Complex(re, im);
            }
            break;
        }
        case Modulation::QAM16: {
            const double scale = 1.0 / std::sqrt(10.0);
            for (unsigned label = 0; label < 16; ++label) {
                const double re = qam16_axis_level((label >> 2) & 0b11) * scale;
                const double im = qam16_axis_level(label & 0b11) * scale;
                c.points[label] = Complex(re, im);
            }
            break;
        }
    }
    return c;
}

ComplexVector modulate(const BitBlock& bits, const Constellation& c) {
    const int k = c.k();
    if (bits.size() % k != 0) {
        throw std::invalid_argument("modulate: bit count must be divisible by bits per symbol");
    }
    ComplexVector symbols(bits.size() / k);
    for (std::size_t s = 0; s < symbols.size(); ++s) {
        unsigned label = 0;
        for (int b = 0; b < k; ++b) label = (label << 1) | (bits[s * k + b] & 1u);
        symbols[s] = c.points[label];
    }
    return symbols;
}

std::size_t slice_symbol(Complex s, const Constellation& c) {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const double d = std::norm(s - c.points[i]);
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    return best;
}

void append_label_bits(const Constellation& c, std::size_t index, BitBlock& out) {
    const int k = c.k();
    const unsigned label = c.labels[index];
    for (int b = k - 1; b >= 0; --b) out.push_back((label >> b) & 1u);
}

BitBlock demodulate_hard(const ComplexVector& symbols, const Constellation& c) {
    BitBlock bits;
    bits.reserve(symbols.size() * c.k());
    for (const Complex& s : symbols) append_label_bits(c, slice_symbol(s, c), bits);
    return bits;
}

}  // namespace vblast
