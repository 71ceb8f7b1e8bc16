#pragma once

#include <vector>

#include "vblast/channel.hpp"
#include "vblast/linalg.hpp"
#include "vblast/modem.hpp"

namespace vblast {

/// Operating point on an Eb/N0 axis.
struct SnrPoint {
    double eb_n0_db = 0.0;

    double linear() const;
    static SnrPoint from_db(double db) { return {db}; }
};

/// Gaussian tail probability Q(x) = erfc(x / sqrt(2)) / 2.
double q_func(double x);

/// Symbol error rate on an AWGN channel as a function of the ratio
/// E_m / sigma_n^2:
///   BPSK   Q(sqrt(2 r))
///   QPSK   Q(sqrt(r))
///   16-QAM (3/4) Q(sqrt(r / 10))
double awgn_ser(Modulation mod, double em_over_n0);

/// Average bit error probability on a Rayleigh fading channel:
///   BPSK   (1/2)(1 - sqrt(b / (b + 1)))
///   QPSK   (1/2)(1 - sqrt(b / (b + 2)))
///   16-QAM (3/4)(1 - sqrt(b / (b + 40)))
double rayleigh_ber(Modulation mod, double beta);

/// beta = (Eb/N0) * E(alpha^2), the fading-averaged SNR.
double fading_beta(double eb_n0_linear, double mean_alpha_sq);

/// Reported diagnostic (1/2) (sum_ij |h_ij|)^2 * em / noise_var.
/// Not used by any detector.
double mimo_snr_metric(const ComplexMatrix& h, double em, double noise_var);

struct AnalyticCurve {
    Modulation modulation;
    ChannelFamily channel_family;
    std::vector<std::pair<double, double>> points;  // (eb_n0_db, probability)
};

}  // namespace vblast
