#include "vblast/sim.hpp"

#include <cmath>
#include <future>
#include <string>

namespace vblast {

void validate(const SimConfig& cfg) {
    if (cfg.nt < 1 || cfg.nr < 1) {
        throw std::invalid_argument("config: nt and nr must be at least 1");
    }
    if (cfg.snr_db_grid.empty()) {
        throw std::invalid_argument("config: snr grid must be nonempty");
    }
    for (std::size_t i = 1; i < cfg.snr_db_grid.size(); ++i) {
        if (!(cfg.snr_db_grid[i] > cfg.snr_db_grid[i - 1])) {
            throw std::invalid_argument("config: snr grid must be strictly ascending");
        }
    }
    if (cfg.channel.nr != cfg.nr || cfg.channel.nt != cfg.nt) {
        throw std::invalid_argument("config: channel spec shape must match nt/nr");
    }
    if (cfg.channel.family == ChannelFamily::FixedIdentity && cfg.nr != cfg.nt) {
        throw std::invalid_argument("config: awgn (identity) channel requires nr == nt");
    }
    if (!(cfg.channel.rician_k >= 0.0) || !std::isfinite(cfg.channel.rician_k)) {
        throw std::invalid_argument("config: rician-k must be finite and nonnegative");
    }
    if ((cfg.detector == DetectorKind::ZF || cfg.detector == DetectorKind::ZF_SIC) &&
        cfg.nr < cfg.nt) {
        throw std::invalid_argument("config: detector " +
                                    std::string(detector_name(cfg.detector)) +
                                    " requires nr >= nt");
    }
    if (cfg.detector == DetectorKind::ML) {
        const std::uint64_t order = std::uint64_t(1) << bits_per_symbol(cfg.modulation);
        std::uint64_t candidates = 1;
        for (std::size_t j = 0; j < cfg.nt; ++j) {
            if (candidates > cfg.ml_guard_limit / order) {
                throw std::invalid_argument(
                    "config: ml candidate count |A|^nt exceeds the guard limit");
            }
            candidates *= order;
        }
    }
    if (cfg.min_bit_errors < 1) {
        throw std::invalid_argument("config: min-errors must be at least 1");
    }
    if (cfg.max_frames < 1) {
        throw std::invalid_argument("config: max-frames must be at least 1");
    }
    if (cfg.workers < 1) {
        throw std::invalid_argument("config: workers must be at least 1");
    }
}

double snr_to_noise_var(double eb_n0_db, Modulation mod, std::size_t /*nt*/) {
    const double es = 1.0;
    const double k = bits_per_symbol(mod);
    return es / (k * std::pow(10.0, eb_n0_db / 10.0));
}

std::optional<double> analytic_reference(Modulation mod, ChannelFamily family, double eb_n0_db) {
    const double eb_n0 = std::pow(10.0, eb_n0_db / 10.0);
    const double k = bits_per_symbol(mod);
    switch (family) {
        case ChannelFamily::FixedIdentity:
            // E_m == E_s: the formula argument is E_s/N_0 = k * Eb/N0.
            return awgn_ser(mod, k * eb_n0);
        case ChannelFamily::Rayleigh:
            return rayleigh_ber(mod, fading_beta(eb_n0, 1.0));
        case ChannelFamily::Rician:
            return std::nullopt;
    }
    return std::nullopt;
}

std::pair<double, double> wilson_interval_95(std::uint64_t errors, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    double low = center - half;
    double high = center + half;
    if (low < 0.0) low = 0.0;
    if (high > 1.0) high = 1.0;
    return {low, high};
}

namespace {

struct BlockCounters {
    std::uint64_t frames = 0;
    std::uint64_t bits = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t symbol_errors = 0;
    std::uint64_t frame_errors = 0;
};

BlockCounters run_block(const SimConfig& cfg, double noise_var, std::uint64_t stream_id,
                        std::uint64_t frame_budget, std::uint64_t error_target) {
    const Constellation constellation = build_constellation(cfg.modulation);
    const int k = constellation.k();
    RngStream rng(cfg.seed, stream_id);

    BlockCounters counters;
    BitBlock tx_bits(cfg.nt * static_cast<std::size_t>(k));

    while (counters.frames < frame_budget && counters.bit_errors < error_target) {
        for (std::uint8_t& b : tx_bits) b = static_cast<std::uint8_t>(rng.next_bit());
        const ComplexVector x = modulate(tx_bits, constellation);
        const ChannelRealization channel = draw_channel(cfg.channel, rng);
        const ComplexVector y = transmit(channel, x, noise_var, rng);
        const DetectionResult decision =
            detect(cfg.detector, y, channel.h, noise_var, 1.0, constellation, cfg.ml_guard_limit);

        std::uint64_t frame_bit_errors = 0;
        for (std::size_t i = 0; i < tx_bits.size(); ++i) {
            frame_bit_errors += tx_bits[i] != decision.bits[i];
        }
        for (std::size_t layer = 0; layer < cfg.nt; ++layer) {
            const std::size_t sent = layer * k;
            bool symbol_ok = true;
            for (int b = 0; b < k; ++b) {
                if (tx_bits[sent + b] != decision.bits[sent + b]) symbol_ok = false;
            }
            counters.symbol_errors += !symbol_ok;
        }
        counters.bit_errors += frame_bit_errors;
        counters.frame_errors += frame_bit_errors > 0;
        counters.bits += tx_bits.size();
        counters.frames += 1;
    }
    return counters;
}

}  // namespace

PointResult partition_and_merge(const SimConfig& cfg, double snr_db, std::size_t workers,
                                std::size_t point_index) {
    validate(cfg);
    if (workers < 1) {
        throw std::invalid_argument("partition_and_merge: workers must be at least 1");
    }
    const double noise_var =
        cfg.force_noiseless ? 0.0 : snr_to_noise_var(snr_db, cfg.modulation, cfg.nt);

    // Even split, remainder to the first blocks; error target shared evenly.
    const std::uint64_t base = cfg.max_frames / workers;
    const std::uint64_t extra = cfg.max_frames % workers;
    const std::uint64_t per_block_target = (cfg.min_bit_errors + workers - 1) / workers;

    std::vector<std::future<BlockCounters>> blocks;
    blocks.reserve(workers);
    for (std::size_t b = 0; b < workers; ++b) {
        const std::uint64_t budget = base + (b < extra ? 1 : 0);
        const std::uint64_t stream_id = (static_cast<std::uint64_t>(point_index) << 32) | b;
        blocks.push_back(std::async(std::launch::async, run_block, std::cref(cfg), noise_var,
                                    stream_id, budget, per_block_target));
    }

    PointResult result;
    result.snr_db = snr_db;
    for (auto& block : blocks) {  // canonical merge order: block index
        const BlockCounters counters = block.get();
        result.frames += counters.frames;
        result.bits += counters.bits;
        result.bit_errors += counters.bit_errors;
        result.symbol_errors += counters.symbol_errors;
        result.frame_errors += counters.frame_errors;
    }

    result.ber = result.bits ? static_cast<double>(result.bit_errors) / result.bits : 0.0;
    result.ser = result.frames
                     ? static_cast<double>(result.symbol_errors) / (result.frames * cfg.nt)
                     : 0.0;
    result.fer = result.frames ? static_cast<double>(result.frame_errors) / result.frames : 0.0;
    std::tie(result.ci95_low, result.ci95_high) =
        wilson_interval_95(result.bit_errors, result.bits);
    result.analytic_ref = analytic_reference(cfg.modulation, cfg.channel.family, snr_db);
    return result;
}

PointResult run_point(const SimConfig& cfg, double snr_db, std::size_t point_index) {
    return partition_and_merge(cfg, snr_db, cfg.workers, point_index);
}

SweepResult run_sweep(const SimConfig& cfg) {
    validate(cfg);
    SweepResult sweep;
    sweep.config = cfg;
    sweep.points.reserve(cfg.snr_db_grid.size());
    for (std::size_t pi = 0; pi < cfg.snr_db_grid.size(); ++pi) {
        sweep.points.push_back(run_point(cfg, cfg.snr_db_grid[pi], pi));
    }
    return sweep;
}

}  // namespace vblast
