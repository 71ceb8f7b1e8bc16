#include "vblast/detect.hpp"

#include <cmath>
#include <limits>

namespace vblast {

const char* detector_name(DetectorKind kind) {
    switch (kind) {
        case DetectorKind::ML: return "ml";
        case DetectorKind::ZF: return "zf";
        case DetectorKind::MMSE: return "mmse";
        case DetectorKind::ZF_SIC: return "zf-sic";
        case DetectorKind::MMSE_SIC: return "mmse-sic";
    }
    throw std::invalid_argument("detector_name: unknown detector");
}

namespace {

void check_received_shape(const ComplexVector& y, const ComplexMatrix& h) {
    if (y.size() != h.rows()) {
        throw std::invalid_argument("detect: received vector length must equal channel rows");
    }
}

DetectionResult finish_linear(const ComplexVector& filtered, const Constellation& c) {
    DetectionResult result;
    result.symbol_indices.reserve(filtered.size());
    for (const Complex& s : filtered) result.symbol_indices.push_back(slice_symbol(s, c));
    for (std::size_t idx : result.symbol_indices) append_label_bits(c, idx, result.bits);
    return result;
}

// Depth-first enumeration in lexicographic index order. residual[d] holds
// y minus the contributions of layers 0..d-1 for the current prefix; only
// strictly better metrics replace the incumbent, so the first (lexicographically
// smallest) minimizer wins ties.
struct MlSearch {
    const ComplexMatrix& h;
    const Constellation& c;
    std::size_t nt;
    std::vector<ComplexVector> residual;   // nt+1 rows of length nr
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    double best_metric = std::numeric_limits<double>::infinity();

    void run(std::size_t depth) {
        const ComplexVector& r = residual[depth];
        if (depth == nt) {
            double metric = 0.0;
            for (const Complex& z : r) metric += std::norm(z);
            if (metric < best_metric) {
                best_metric = metric;
                best = current;
            }
            return;
        }
        ComplexVector& next = residual[depth + 1];
        for (std::size_t a = 0; a < c.size(); ++a) {
            const Complex point = c.points[a];
            for (std::size_t i = 0; i < r.size(); ++i) next[i] = r[i] - h(i, depth) * point;
            current[depth] = a;
            run(depth + 1);
        }
    }
};

}  // namespace

DetectionResult detect_ml(const ComplexVector& y, const ComplexMatrix& h, const Constellation& c,
                          std::uint64_t guard_limit) {
    check_received_shape(y, h);
    const std::size_t nt = h.cols();

    std::uint64_t candidates = 1;
    for (std::size_t j = 0; j < nt; ++j) {
        if (candidates > guard_limit / c.size()) {
            throw MlGuardLimitError("detect_ml: |A|^nt exceeds the candidate guard limit");
        }
        candidates *= c.size();
    }
    if (candidates > guard_limit) {
        throw MlGuardLimitError("detect_ml: |A|^nt exceeds the candidate guard limit");
    }

    MlSearch search{h, c, nt, {}, {}, {}, std::numeric_limits<double>::infinity()};
    search.residual.assign(nt + 1, ComplexVector(y.size()));
    search.residual[0] = y;
    search.current.assign(nt, 0);
    search.run(0);

    DetectionResult result;
    result.symbol_indices = std::move(search.best);
    for (std::size_t idx : result.symbol_indices) append_label_bits(c, idx, result.bits);
    result.ml_candidates_evaluated = candidates;
    return result;
}

DetectionResult detect_zf(const ComplexVector& y, const ComplexMatrix& h, const Constellation& c) {
    check_received_shape(y, h);
    return finish_linear(matvec(pseudo_inverse(h), y), c);
}

DetectionResult detect_mmse(const ComplexVector& y, const ComplexMatrix& h, double noise_var,
                            double es, const Constellation& c) {
    check_received_shape(y, h);
    if (noise_var < 0.0 || !(es > 0.0)) {
        throw std::invalid_argument("detect_mmse: need noise_var >= 0 and es > 0");
    }
    return finish_linear(matvec(regularized_inverse(h, noise_var / es), y), c);
}

DetectionResult detect_sic(const ComplexVector& y, const ComplexMatrix& h, double noise_var,
                           double es, const Constellation& c, SicNulling nulling) {
    check_received_shape(y, h);
    if (noise_var < 0.0 || !(es > 0.0)) {
        throw std::invalid_argument("detect_sic: need noise_var >= 0 and es > 0");
    }
    const std::size_t nt = h.cols();
    const double lambda = noise_var / es;

    DetectionResult result;
    result.symbol_indices.assign(nt, 0);
    result.sic_order.reserve(nt);

    ComplexMatrix deflated = h;
    std::vector<std::size_t> remaining(nt);  // original layer index per deflated column
    for (std::size_t j = 0; j < nt; ++j) remaining[j] = j;
    ComplexVector y_current = y;

    while (!remaining.empty()) {
        const ComplexMatrix filter = nulling == SicNulling::ZF
                                         ? pseudo_inverse(deflated)
                                         : regularized_inverse(deflated, lambda);
        const std::vector<double> norms = row_norms(filter);

        // remaining[] is ascending in original layer index, so keeping the
        // first minimum breaks ties toward the lowest layer.
        std::size_t sel = 0;
        for (std::size_t r = 1; r < norms.size(); ++r) {
            if (norms[r] < norms[sel]) sel = r;
        }

        Complex estimate = 0.0;
        for (std::size_t i = 0; i < y_current.size(); ++i) estimate += filter(sel, i) * y_current[i];
        const std::size_t point_index = slice_symbol(estimate, c);

        const std::size_t layer = remaining[sel];
        result.symbol_indices[layer] = point_index;
        result.sic_order.push_back(layer);

        const Complex point = c.points[point_index];
        for (std::size_t i = 0; i < y_current.size(); ++i) y_current[i] -= deflated(i, sel) * point;

        deflated = deflated.without_column(sel);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(sel));
    }

    for (std::size_t idx : result.symbol_indices) append_label_bits(c, idx, result.bits);
    return result;
}

DetectionResult detect(DetectorKind kind, const ComplexVector& y, const ComplexMatrix& h,
                       double noise_var, double es, const Constellation& c,
                       std::uint64_t ml_guard_limit) {
    switch (kind) {
        case DetectorKind::ML: return detect_ml(y, h, c, ml_guard_limit);
        case DetectorKind::ZF: return detect_zf(y, h, c);
        case DetectorKind::MMSE: return detect_mmse(y, h, noise_var, es, c);
        case DetectorKind::ZF_SIC: return detect_sic(y, h, noise_var, es, c, SicNulling::ZF);
        case DetectorKind::MMSE_SIC: return detect_sic(y, h, noise_var, es, c, SicNulling::MMSE);
    }
    throw std::invalid_argument("detect: unknown detector");
}

}  // namespace vblast
