#pragma once

#include <cstdint>
#include <vector>

#include "vblast/linalg.hpp"
#include "vblast/modem.hpp"

namespace vblast {

enum class DetectorKind { ML, ZF, MMSE, ZF_SIC, MMSE_SIC };

const char* detector_name(DetectorKind kind);

enum class SicNulling { ZF, MMSE };

/// Thrown when an exhaustive search would enumerate more candidates than the
/// configured guard limit allows.
class MlGuardLimitError : public std::runtime_error {
public:
    explicit MlGuardLimitError(const std::string& what) : std::runtime_error(what) {}
};

constexpr std::uint64_t kDefaultMlGuardLimit = std::uint64_t(1) << 20;

struct DetectionResult {
    std::vector<std::size_t> symbol_indices;  // one constellation index per layer
    BitBlock bits;                            // labels of all layers, layer 0 first
    std::uint64_t ml_candidates_evaluated = 0;  // ML only
    std::vector<std::size_t> sic_order;         // SIC only: detection order of layers
};

/// Exhaustive search for the candidate vector minimizing ||y - H x||^2 over
/// every constellation-valued x. Ties break toward the lexicographically
/// smallest index sequence. Cost is |A|^nt metric evaluations.
DetectionResult detect_ml(const ComplexVector& y, const ComplexMatrix& h, const Constellation& c,
                          std::uint64_t guard_limit = kDefaultMlGuardLimit);

/// Linear zero-forcing: slice each component of pinv(H) y.
DetectionResult detect_zf(const ComplexVector& y, const ComplexMatrix& h, const Constellation& c);

/// Linear MMSE: slice each component of (lambda I + H^H H)^-1 H^H y with
/// lambda = noise_var / es. noise_var = 0 coincides with zero-forcing.
DetectionResult detect_mmse(const ComplexVector& y, const ComplexMatrix& h, double noise_var,
                            double es, const Constellation& c);

/// Ordered successive interference cancellation with ZF or MMSE nulling.
/// Each round recomputes the nulling filter of the deflated channel, detects
/// the remaining layer with the smallest filter-row norm (maximum
/// post-detection SNR, ties toward the lowest layer index), subtracts its
/// reconstructed contribution from the received vector and removes its
/// column from the channel.
DetectionResult detect_sic(const ComplexVector& y, const ComplexMatrix& h, double noise_var,
                           double es, const Constellation& c, SicNulling nulling);

/// Dispatch on DetectorKind; noise_var and es only reach the MMSE family.
DetectionResult detect(DetectorKind kind, const ComplexVector& y, const ComplexMatrix& h,
                       double noise_var, double es, const Constellation& c,
                       std::uint64_t ml_guard_limit = kDefaultMlGuardLimit);

}  // namespace vblast
