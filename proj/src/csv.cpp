#include "vblast/csv.hpp"

#include <cstdio>
#include <set>
#include <utility>

namespace vblast {

std::string format_csv_float(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.10g", value);
    return buf;
}

namespace {

void emit_rows(const SweepResult& result, std::ostream& sink) {
    const SimConfig& cfg = result.config;
    for (const PointResult& p : result.points) {
        sink << format_csv_float(p.snr_db) << ',' << detector_name(cfg.detector) << ','
             << modulation_name(cfg.modulation) << ',' << cfg.nt << ',' << cfg.nr << ','
             << p.frames << ',' << p.bits << ',' << p.bit_errors << ','
             << format_csv_float(p.ber) << ',' << format_csv_float(p.ser) << ','
             << format_csv_float(p.fer) << ',' << format_csv_float(p.ci95_low) << ','
             << format_csv_float(p.ci95_high) << ','
             << (p.analytic_ref ? format_csv_float(*p.analytic_ref) : std::string()) << '\n';
    }
}

}  // namespace

void emit_csv(std::span<const SweepResult> results, std::ostream& sink) {
    sink << "snr_db,detector,modulation,nt,nr,frames,bits,bit_errors,ber,ser,fer,"
            "ci95_low,ci95_high,analytic_ber\n";
    for (const SweepResult& result : results) emit_rows(result, sink);
    if (!sink) throw std::runtime_error("emit_csv: write failure");
}

void emit_csv(const SweepResult& result, std::ostream& sink) {
    emit_csv(std::span<const SweepResult>(&result, 1), sink);
}

void emit_plot_script(std::span<const SweepResult> results, const std::string& csv_path,
                      std::ostream& sink) {
    sink << "# gnuplot script, run from the directory containing the csv\n"
         << "set datafile separator ','\n"
         << "set logscale y\n"
         << "set grid\n"
         << "set xlabel 'Eb/N0 (dB)'\n"
         << "set ylabel 'error rate'\n"
         << "set key outside\n"
         << "set format y '1e%T'\n";

    std::set<std::pair<std::string, std::string>> series;   // (detector, modulation)
    std::set<std::string> overlays;                         // modulation with analytic values
    for (const SweepResult& result : results) {
        const std::string det = detector_name(result.config.detector);
        const std::string mod = modulation_name(result.config.modulation);
        series.insert({det, mod});
        for (const PointResult& p : result.points) {
            if (p.analytic_ref) overlays.insert(mod);
        }
    }

    sink << "plot \\\n";
    bool first = true;
    for (const auto& [det, mod] : series) {
        if (!first) sink << ", \\\n";
        first = false;
        sink << "  '" << csv_path << "' using 1:(strcol(2) eq '" << det
             << "' && strcol(3) eq '" << mod
             << "' ? column(9) : 1/0) with linespoints title '" << det << ' ' << mod << "'";
    }
    for (const std::string& mod : overlays) {
        if (!first) sink << ", \\\n";
        first = false;
        sink << "  '" << csv_path << "' using 1:(strcol(3) eq '" << mod
             << "' && strcol(14) ne '' ? column(14) : 1/0) with lines dashtype 2 title '" << mod
             << " analytic'";
    }
    sink << '\n';
    if (!sink) throw std::runtime_error("emit_plot_script: write failure");
}

}  // namespace vblast
