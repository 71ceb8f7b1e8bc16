#include "vblast/channel.hpp"

#include <cmath>

namespace vblast {

const char* channel_family_name(ChannelFamily family) {
    switch (family) {
        case ChannelFamily::FixedIdentity: return "awgn";
        case ChannelFamily::Rayleigh: return "rayleigh";
        case ChannelFamily::Rician: return "rician";
    }
    throw std::invalid_argument("channel_family_name: unknown family");
}

ChannelRealization draw_channel(const ChannelSpec& spec, RngStream& rng) {
    switch (spec.family) {
        case ChannelFamily::FixedIdentity:
            if (spec.nr != spec.nt) {
                throw std::invalid_argument("draw_channel: identity channel requires nr == nt");
            }
            return {ComplexMatrix::identity(spec.nr)};
        case ChannelFamily::Rayleigh: {
            ComplexMatrix h(spec.nr, spec.nt);
            for (std::size_t i = 0; i < spec.nr; ++i)
                for (std::size_t j = 0; j < spec.nt; ++j) h(i, j) = rng.next_cn(1.0);
            return {std::move(h)};
        }
        case ChannelFamily::Rician: {
            const double k = spec.rician_k;
            const double los = std::sqrt(k / (k + 1.0));
            const double scatter = std::sqrt(1.0 / (k + 1.0));
            ComplexMatrix h(spec.nr, spec.nt);
            for (std::size_t i = 0; i < spec.nr; ++i) {
                for (std::size_t j = 0; j < spec.nt; ++j) {
                    const Complex w = rng.next_cn(1.0);
                    h(i, j) = Complex(los + scatter * w.real(), scatter * w.imag());
                }
            }
            return {std::move(h)};
        }
    }
    throw std::invalid_argument("draw_channel: unknown family");
}

ComplexVector transmit(const ChannelRealization& h, const ComplexVector& x, double noise_var,
                       RngStream& rng) {
    if (x.size() != h.h.cols()) {
        throw std::invalid_argument("transmit: input length must equal transmit antenna count");
    }
    if (noise_var < 0.0) {
        throw std::invalid_argument("transmit: noise variance must be nonnegative");
    }
    ComplexVector y = matvec(h.h, x);
    if (noise_var > 0.0) {
        for (Complex& yi : y) yi += rng.next_cn(noise_var);
    }
    return y;
}

double rayleigh_pdf(double r, double phi_sq) {
    if (r < 0.0) throw std::domain_error("rayleigh_pdf: r must be nonnegative");
    if (!(phi_sq > 0.0)) throw std::domain_error("rayleigh_pdf: phi_sq must be positive");
    return (r / phi_sq) * std::exp(-r * r / (2.0 * phi_sq));
}

double gaussian_pdf(double r, double mean, double phi_sq) {
    if (!(phi_sq > 0.0)) throw std::domain_error("gaussian_pdf: phi_sq must be positive");
    const double d = r - mean;
    return std::exp(-d * d / (2.0 * phi_sq)) / std::sqrt(2.0 * M_PI * phi_sq);
}

std::vector<std::pair<double, double>> density_table(DensityFamily family,
                                                     const DensityParams& params,
                                                     const std::vector<double>& r_grid) {
    for (std::size_t i = 1; i < r_grid.size(); ++i) {
        if (!(r_grid[i] > r_grid[i - 1])) {
            throw std::invalid_argument("density_table: grid must be strictly ascending");
        }
    }
    std::vector<std::pair<double, double>> table;
    table.reserve(r_grid.size());
    for (double r : r_grid) {
        const double f = family == DensityFamily::Rayleigh
                             ? rayleigh_pdf(r, params.phi_sq)
                             : gaussian_pdf(r, params.mean, params.phi_sq);
        table.emplace_back(r, f);
    }
    return table;
}

}  // namespace vblast
