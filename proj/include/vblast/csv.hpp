#pragma once

#include <ostream>
#include <span>
#include <string>

#include "vblast/sim.hpp"

namespace vblast {

/// One float field, 10 significant digits, trailing zeros kept
/// (so a zero rate renders as 0.000000000).
std::string format_csv_float(double value);

/// Frozen sweep schema. Header line:
///   snr_db,detector,modulation,nt,nr,frames,bits,bit_errors,ber,ser,fer,
///   ci95_low,ci95_high,analytic_ber
/// One data row per point in grid order, '\n' line endings, missing analytic
/// reference rendered as an empty field.
void emit_csv(const SweepResult& result, std::ostream& sink);

/// Same schema over several sweeps (one header, rows sweep by sweep); used by
/// multi-detector comparisons.
void emit_csv(std::span<const SweepResult> results, std::ostream& sink);

/// gnuplot script: log-scale y, Eb/N0 on x, one series per (detector,
/// modulation) pair plus one analytic overlay per modulation that has
/// reference values. References the CSV by the given (relative) path.
void emit_plot_script(std::span<const SweepResult> results, const std::string& csv_path,
                      std::ostream& sink);

}  // namespace vblast
