#pragma once

#include <utility>
#include <vector>

#include "vblast/linalg.hpp"
#include "vblast/rng.hpp"

namespace vblast {

enum class ChannelFamily { FixedIdentity, Rayleigh, Rician };

const char* channel_family_name(ChannelFamily family);

/// Channel description: family plus antenna counts. rician_k is the
/// LOS-to-scattered power ratio K = A^2 / (2 phi^2), used only for Rician.
struct ChannelSpec {
    ChannelFamily family = ChannelFamily::Rayleigh;
    double rician_k = 0.0;
    std::size_t nr = 1;
    std::size_t nt = 1;
};

struct ChannelRealization {
    ComplexMatrix h;
};

/// One quasi-static channel draw.
///   FixedIdentity -> I (requires nr == nt)
///   Rayleigh      -> i.i.d. CN(0,1) entries
///   Rician        -> sqrt(K/(K+1)) * ones + sqrt(1/(K+1)) * Rayleigh draw,
///                    which keeps E|h|^2 = 1 for every K and reduces exactly
///                    to Rayleigh at K = 0.
ChannelRealization draw_channel(const ChannelSpec& spec, RngStream& rng);

/// y = H x + n with n i.i.d. CN(0, noise_var). noise_var = 0 adds nothing
/// and consumes no randomness.
ComplexVector transmit(const ChannelRealization& h, const ComplexVector& x, double noise_var,
                       RngStream& rng);

/// f(r) = (r / phi^2) exp(-r^2 / (2 phi^2)), r >= 0.
double rayleigh_pdf(double r, double phi_sq);

/// Gaussian density with mean `mean` and variance phi_sq.
double gaussian_pdf(double r, double mean, double phi_sq);

struct DensityParams {
    double phi_sq = 1.0;
    double mean = 0.0;  // Gaussian only
};

enum class DensityFamily { Rayleigh, Gaussian };

/// Tabulate the selected pdf over an ascending grid.
std::vector<std::pair<double, double>> density_table(DensityFamily family,
                                                     const DensityParams& params,
                                                     const std::vector<double>& r_grid);

}  // namespace vblast
