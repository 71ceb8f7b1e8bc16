// Command line front end: Monte Carlo sweeps, closed-form curves and pdf
// tables, all emitted as CSV (plus an optional gnuplot script).
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "vblast/csv.hpp"
#include "vblast/sim.hpp"

using namespace vblast;

namespace {

Modulation parse_modulation(const std::string& name) {
    if (name == "bpsk") return Modulation::BPSK;
    if (name == "qpsk") return Modulation::QPSK;
    if (name == "qam16") return Modulation::QAM16;
    throw std::invalid_argument("--mod: expected bpsk|qpsk|qam16, got '" + name + "'");
}

DetectorKind parse_detector(const std::string& name) {
    if (name == "ml") return DetectorKind::ML;
    if (name == "zf") return DetectorKind::ZF;
    if (name == "mmse") return DetectorKind::MMSE;
    if (name == "zf-sic") return DetectorKind::ZF_SIC;
    if (name == "mmse-sic") return DetectorKind::MMSE_SIC;
    throw std::invalid_argument("--detector: expected ml|zf|mmse|zf-sic|mmse-sic, got '" + name +
                                "'");
}

ChannelFamily parse_channel(const std::string& name) {
    if (name == "awgn") return ChannelFamily::FixedIdentity;
    if (name == "rayleigh") return ChannelFamily::Rayleigh;
    if (name == "rician") return ChannelFamily::Rician;
    throw std::invalid_argument("--channel: expected awgn|rayleigh|rician, got '" + name + "'");
}

// "start:step:stop" (inclusive of stop when exactly reachable) or a single value
std::vector<double> parse_range(const std::string& text, const char* flag) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(flag) + ": cannot parse '" + token +
                                        "' as a number");
        }
    }
    if (parts.size() == 1) return parts;
    if (parts.size() != 3) {
        throw std::invalid_argument(std::string(flag) +
                                    ": expected start:step:stop or a single value");
    }
    const double start = parts[0], step = parts[1], stop = parts[2];
    if (!(step > 0.0)) throw std::invalid_argument(std::string(flag) + ": step must be positive");
    if (stop < start) throw std::invalid_argument(std::string(flag) + ": stop must be >= start");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double v = start + i * step;
        if (v > stop + 1e-9 * step) break;
        grid.push_back(v);
    }
    return grid;
}

// Data goes to stdout unless --out names a file.
struct Sink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Sink(const std::string& path) {
        if (path != "-") {
            file.open(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
            stream = &file;
        }
    }
};

struct SweepOptions {
    std::size_t nt = 2;
    std::size_t nr = 2;
    std::string mod = "qpsk";
    std::string detector = "zf";
    std::string detectors = "ml,zf,mmse,zf-sic,mmse-sic";  // compare only
    std::string channel = "rayleigh";
    double rician_k = 0.0;
    std::string snr = "0:2:20";
    std::uint64_t min_errors = 200;
    std::uint64_t max_frames = 2'000'000;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    std::string out = "-";
    std::string plot_script;
    std::string config_path;
};

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(key + ": cannot parse '" + value + "' as an integer");
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(key + ": cannot parse '" + value + "' as a number");
    }
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// key=value lines mirroring the flag names; blank lines and '#' comments
// allowed. Flags given on the command line keep their values.
void apply_config_file(const CLI::App* sub, SweepOptions& opt, bool with_detector) {
    std::ifstream in(opt.config_path);
    if (!in) {
        throw std::invalid_argument("--config: cannot read '" + opt.config_path + "'");
    }
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("--config: line " + std::to_string(line_no) +
                                        " is not key=value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (sub->count("--" + key) > 0) continue;  // flag overrides file

        if (key == "nt") {
            opt.nt = parse_u64(key, value);
        } else if (key == "nr") {
            opt.nr = parse_u64(key, value);
        } else if (key == "mod") {
            opt.mod = value;
        } else if (key == "detector" && with_detector) {
            opt.detector = value;
        } else if (key == "detectors" && !with_detector) {
            opt.detectors = value;
        } else if (key == "channel") {
            opt.channel = value;
        } else if (key == "rician-k") {
            opt.rician_k = parse_double(key, value);
        } else if (key == "snr") {
            opt.snr = value;
        } else if (key == "min-errors") {
            opt.min_errors = parse_u64(key, value);
        } else if (key == "max-frames") {
            opt.max_frames = parse_u64(key, value);
        } else if (key == "seed") {
            opt.seed = parse_u64(key, value);
        } else if (key == "workers") {
            opt.workers = static_cast<std::size_t>(parse_u64(key, value));
            if (opt.workers < 1) throw std::invalid_argument("workers: must be at least 1");
        } else if (key == "out") {
            opt.out = value;
        } else if (key == "plot-script") {
            opt.plot_script = value;
        } else {
            throw std::invalid_argument("--config: unknown key '" + key + "'");
        }
    }
}

void add_sweep_options(CLI::App* sub, SweepOptions& opt, bool with_detector) {
    sub->add_option("--nt", opt.nt, "transmit antennas")->check(CLI::PositiveNumber);
    sub->add_option("--nr", opt.nr, "receive antennas")->check(CLI::PositiveNumber);
    sub->add_option("--mod", opt.mod, "modulation: bpsk|qpsk|qam16");
    if (with_detector) {
        sub->add_option("--detector", opt.detector, "detector: ml|zf|mmse|zf-sic|mmse-sic");
    }
    sub->add_option("--channel", opt.channel, "channel: awgn|rayleigh|rician");
    sub->add_option("--rician-k", opt.rician_k, "Rician K-factor")->check(CLI::NonNegativeNumber);
    sub->add_option("--snr", opt.snr, "Eb/N0 grid in dB, start:step:stop");
    sub->add_option("--min-errors", opt.min_errors, "bit errors collected per point");
    sub->add_option("--max-frames", opt.max_frames, "frame cap per point");
    sub->add_option("--seed", opt.seed, "rng seed");
    sub->add_option("--workers", opt.workers, "parallel blocks per point")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", opt.out, "output CSV path, '-' for stdout");
    sub->add_option("--plot-script", opt.plot_script, "also write a gnuplot script here");
    sub->add_option("--config", opt.config_path, "config file with key=value lines; flags override");
}

SimConfig to_config(const SweepOptions& opt, DetectorKind detector) {
    SimConfig cfg;
    cfg.nt = opt.nt;
    cfg.nr = opt.nr;
    cfg.modulation = parse_modulation(opt.mod);
    cfg.detector = detector;
    cfg.channel = {parse_channel(opt.channel), opt.rician_k, opt.nr, opt.nt};
    cfg.snr_db_grid = parse_range(opt.snr, "--snr");
    cfg.min_bit_errors = opt.min_errors;
    cfg.max_frames = opt.max_frames;
    cfg.seed = opt.seed;
    cfg.workers = opt.workers;
    return cfg;
}

void write_outputs(const std::vector<SweepResult>& results, const SweepOptions& opt) {
    Sink sink(opt.out);
    emit_csv(results, *sink.stream);
    sink.stream->flush();
    if (!opt.plot_script.empty()) {
        if (opt.out == "-") {
            throw std::invalid_argument("--plot-script requires --out to name a file");
        }
        std::ofstream script(opt.plot_script, std::ios::binary);
        if (!script) {
            throw std::runtime_error("cannot open plot script file '" + opt.plot_script + "'");
        }
        emit_plot_script(results, opt.out, script);
    }
    std::cerr << "# reproducible: seed=" << opt.seed << " workers=" << opt.workers << "\n";
}

int run_sweep_command(const CLI::App* sub, SweepOptions opt) {
    if (!opt.config_path.empty()) apply_config_file(sub, opt, true);
    const SimConfig cfg = to_config(opt, parse_detector(opt.detector));
    validate(cfg);
    const SweepResult result = run_sweep(cfg);
    write_outputs({result}, opt);
    return 0;
}

int run_compare_command(const CLI::App* sub, SweepOptions opt) {
    if (!opt.config_path.empty()) apply_config_file(sub, opt, false);
    std::vector<DetectorKind> kinds;
    std::stringstream ss(opt.detectors);
    std::string name;
    while (std::getline(ss, name, ',')) kinds.push_back(parse_detector(name));
    if (kinds.empty()) throw std::invalid_argument("--detectors: list is empty");

    std::vector<SimConfig> configs;
    for (DetectorKind kind : kinds) {
        configs.push_back(to_config(opt, kind));
        validate(configs.back());  // every detector validated before any trial runs
    }
    std::vector<SweepResult> results;
    results.reserve(configs.size());
    for (const SimConfig& cfg : configs) results.push_back(run_sweep(cfg));
    write_outputs(results, opt);
    return 0;
}

int run_analytic_command(const std::string& mod_name, const std::string& channel_name,
                         const std::string& snr, const std::string& out) {
    const Modulation mod = parse_modulation(mod_name);
    const ChannelFamily family = parse_channel(channel_name);
    AnalyticCurve curve{mod, family, {}};
    for (double db : parse_range(snr, "--snr")) {
        const auto p = analytic_reference(mod, family, db);
        if (!p) {
            throw std::invalid_argument("--channel: no closed form for '" + channel_name + "'");
        }
        curve.points.emplace_back(db, *p);
    }
    Sink sink(out);
    *sink.stream << "snr_db,modulation,channel,probability\n";
    for (const auto& [db, prob] : curve.points) {
        *sink.stream << format_csv_float(db) << ',' << modulation_name(mod) << ','
                     << channel_family_name(family) << ',' << format_csv_float(prob) << '\n';
    }
    return 0;
}

int run_density_command(const std::string& family_name, double phi_sq, double mean,
                        const std::string& r_range, const std::string& out) {
    DensityFamily family;
    if (family_name == "rayleigh") {
        family = DensityFamily::Rayleigh;
    } else if (family_name == "gaussian") {
        family = DensityFamily::Gaussian;
    } else {
        throw std::invalid_argument("--family: expected rayleigh|gaussian, got '" + family_name +
                                    "'");
    }
    const auto table = density_table(family, {phi_sq, mean}, parse_range(r_range, "--r"));
    Sink sink(out);
    *sink.stream << "r,pdf\n";
    for (const auto& [r, f] : table) {
        *sink.stream << format_csv_float(r) << ',' << format_csv_float(f) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MIMO V-BLAST link-level simulator"};
    app.require_subcommand(1);

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo error-rate sweep");
    add_sweep_options(sweep, sweep_opt, true);

    SweepOptions compare_opt;
    CLI::App* compare = app.add_subcommand("compare", "one sweep per detector, merged CSV");
    add_sweep_options(compare, compare_opt, false);
    compare->add_option("--detectors", compare_opt.detectors, "comma-separated detector list");

    std::string an_mod = "bpsk", an_channel = "rayleigh", an_snr = "0:2:20", an_out = "-";
    CLI::App* analytic = app.add_subcommand("analytic", "closed-form curve, no simulation");
    analytic->add_option("--mod", an_mod, "modulation: bpsk|qpsk|qam16");
    analytic->add_option("--channel", an_channel, "channel: awgn|rayleigh");
    analytic->add_option("--snr", an_snr, "Eb/N0 grid in dB, start:step:stop");
    analytic->add_option("--out", an_out, "output CSV path, '-' for stdout");

    std::string de_family = "rayleigh", de_r = "0:0.05:6", de_out = "-";
    double de_phi_sq = 1.0, de_mean = 0.0;
    CLI::App* density = app.add_subcommand("density", "pdf table (Rayleigh or Gaussian)");
    density->add_option("--family", de_family, "rayleigh|gaussian");
    density->add_option("--phi-sq", de_phi_sq, "scale/variance parameter")
        ->check(CLI::PositiveNumber);
    density->add_option("--mean", de_mean, "Gaussian mean");
    density->add_option("--r", de_r, "r grid, start:step:stop");
    density->add_option("--out", de_out, "output CSV path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) return run_sweep_command(sweep, sweep_opt);
        if (compare->parsed()) return run_compare_command(compare, compare_opt);
        if (analytic->parsed()) return run_analytic_command(an_mod, an_channel, an_snr, an_out);
        if (density->parsed()) {
            return run_density_command(de_family, de_phi_sq, de_mean, de_r, de_out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
