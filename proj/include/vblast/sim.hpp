#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vblast/analytic.hpp"
#include "vblast/channel.hpp"
#include "vblast/detect.hpp"
#include "vblast/modem.hpp"

namespace vblast {

/// Monte Carlo sweep configuration.
///
/// Energy and SNR bookkeeping, fixed once for the whole toolkit:
///   * Constellations have unit average symbol energy, E_s = 1 per transmit
///     antenna, so a frame (one vector channel use) radiates nt * E_s.
///   * The x axis is E_b/N_0 in dB with E_b = E_s / k for k bits per symbol.
///   * The complex noise variance per receive antenna is therefore
///     N_0 = E_s / (k * 10^(dB/10)); each noise component is CN(0, N_0).
///   * Closed-form overlays receive E_m == E_s (so E_m/sigma_n^2 = k * Eb/N0
///     linear) and beta = (Eb/N0 linear) * E(alpha^2) with E(alpha^2) = 1.
struct SimConfig {
    std::size_t nt = 1;
    std::size_t nr = 1;
    Modulation modulation = Modulation::BPSK;
    DetectorKind detector = DetectorKind::ZF;
    ChannelSpec channel{ChannelFamily::Rayleigh, 0.0, 1, 1};
    std::vector<double> snr_db_grid;  // Eb/N0 in dB, strictly ascending
    std::uint64_t min_bit_errors = 200;
    std::uint64_t max_frames = 2'000'000;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::uint64_t ml_guard_limit = kDefaultMlGuardLimit;
    bool force_noiseless = false;  // debug: transmit with noise_var = 0
};

/// Per-SNR-point counters and rates.
struct PointResult {
    double snr_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t bits = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t symbol_errors = 0;
    std::uint64_t frame_errors = 0;
    double ber = 0.0;
    double ser = 0.0;
    double fer = 0.0;
    double ci95_low = 0.0;   // Wilson score interval on the bit error rate
    double ci95_high = 0.0;
    std::optional<double> analytic_ref;
};

struct SweepResult {
    SimConfig config;  // echo; reproducibility is a function of (config, seed, workers)
    std::vector<PointResult> points;
};

/// Throws std::invalid_argument naming the offending parameter. Runs before
/// any trial starts.
void validate(const SimConfig& cfg);

/// N_0 = E_s / (k * 10^(dB/10)) with E_s = 1. The transmit antenna count does
/// not enter: energy is normalized per antenna, not per frame.
double snr_to_noise_var(double eb_n0_db, Modulation mod, std::size_t nt);

/// Closed-form reference value for the configured (modulation, channel
/// family) at the given Eb/N0, when one exists (AWGN and Rayleigh only),
/// using the argument mapping documented on SimConfig.
std::optional<double> analytic_reference(Modulation mod, ChannelFamily family, double eb_n0_db);

/// Wilson 95% score interval for `errors` successes in `trials` draws.
std::pair<double, double> wilson_interval_95(std::uint64_t errors, std::uint64_t trials);

/// One SNR point with cfg.workers blocks (see partition_and_merge).
PointResult run_point(const SimConfig& cfg, double snr_db, std::size_t point_index = 0);

/// Splits the frame budget and error target evenly over `workers` blocks.
/// Block b draws from stream_id = (point_index << 32) | b and runs until its
/// share of the error target or frame budget is exhausted; block counters
/// are summed in block order, so the result is a deterministic function of
/// (config, seed, workers).
PointResult partition_and_merge(const SimConfig& cfg, double snr_db, std::size_t workers,
                                std::size_t point_index = 0);

/// Maps run_point over the SNR grid, preserving grid order.
SweepResult run_sweep(const SimConfig& cfg);

}  // namespace vblast
