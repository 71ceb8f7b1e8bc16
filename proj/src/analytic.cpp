#include "vblast/analytic.hpp"

#include <cmath>

namespace vblast {

double SnrPoint::linear() const { return std::pow(10.0, eb_n0_db / 10.0); }

double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double awgn_ser(Modulation mod, double em_over_n0) {
    if (!(em_over_n0 > 0.0)) {
        throw std::domain_error("awgn_ser: ratio must be positive");
    }
    switch (mod) {
        case Modulation::BPSK: return q_func(std::sqrt(2.0 * em_over_n0));
        case Modulation::QPSK: return q_func(std::sqrt(em_over_n0));
        case Modulation::QAM16: return 0.75 * q_func(std::sqrt(em_over_n0 / 10.0));
    }
    throw std::invalid_argument("awgn_ser: unknown modulation");
}

double rayleigh_ber(Modulation mod, double beta) {
    if (!(beta > 0.0)) {
        throw std::domain_error("rayleigh_ber: beta must be positive");
    }
    switch (mod) {
        case Modulation::BPSK: return 0.5 * (1.0 - std::sqrt(beta / (beta + 1.0)));
        case Modulation::QPSK: return 0.5 * (1.0 - std::sqrt(beta / (beta + 2.0)));
        case Modulation::QAM16: return 0.75 * (1.0 - std::sqrt(beta / (beta + 40.0)));
    }
    throw std::invalid_argument("rayleigh_ber: unknown modulation");
}

double fading_beta(double eb_n0_linear, double mean_alpha_sq) {
    if (!(eb_n0_linear > 0.0) || !(mean_alpha_sq > 0.0)) {
        throw std::domain_error("fading_beta: both factors must be positive");
    }
    return eb_n0_linear * mean_alpha_sq;
}

double mimo_snr_metric(const ComplexMatrix& h, double em, double noise_var) {
    double magnitude_sum = 0.0;
    for (const Complex& z : h.entries()) magnitude_sum += std::abs(z);
    return 0.5 * magnitude_sum * magnitude_sum * em / noise_var;
}

}  // namespace vblast
