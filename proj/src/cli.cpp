#include "qsar/cli.hpp"

#include "qsar/circuit.hpp"
#include "qsar/matrix_io.hpp"
#include "qsar/params_io.hpp"
#include "qsar/qft.hpp"
#include "qsar/random.hpp"
#include "qsar/rda.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <utility>

namespace qsar::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands = {{
    {Command::SimulateRaw, "simulate-raw"},
    {Command::Rda, "rda"},
    {Command::RdaHybrid, "rda-hybrid"},
    {Command::Qrda, "qrda"},
    {Command::RcmcIsolated, "rcmc-isolated"},
    {Command::Compare, "compare"},
    {Command::QftSelftest, "qft-selftest"},
}};

// Ordered key=value report.
class Report {
public:
    void add(std::string_view key, std::string_view value) {
        text_.append(key);
        text_.push_back('=');
        text_.append(value);
        text_.push_back('\n');
    }
    void add(std::string_view key, double value) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6e", value);
        add(key, std::string_view(buf));
    }
    void add(std::string_view key, std::size_t value) { add(key, std::string_view(std::to_string(value))); }
    void add(std::string_view key, bool value) { add(key, std::string_view(value ? "true" : "false")); }

    const std::string& text() const { return text_; }

private:
    std::string text_;
};

std::string pgm_header(std::size_t width, std::size_t height) {
    return "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
}

SarParams resolve_params(const RunConfig& config, std::size_t n_range) {
    return config.params_path ? io::load_params(*config.params_path) : desk_scale_params(n_range);
}

std::vector<PointTarget> resolve_targets(const RunConfig& config) {
    if (config.targets_path) {
        return io::load_targets(*config.targets_path);
    }
    return {PointTarget{}};
}

GridShape resolve_size(const RunConfig& config) { return config.size.value_or(GridShape{64, 64}); }

void require_power_of_two(const ComplexMatrix& m) {
    if (!m.dims_are_powers_of_two()) {
        throw UsageError("input is " + std::to_string(m.n_range()) + "x" + std::to_string(m.n_azimuth()) +
                         "; the quantum pipelines need power-of-two dimensions");
    }
}

void write_matrix_artifacts(const std::filesystem::path& dir, std::string_view stem, const ComplexMatrix& m) {
    io::store_matrix(m, dir / (std::string(stem) + ".qsar"), io::MatrixFormat::Binary);
    io::write_file(dir / (std::string(stem) + "_magnitude.pgm"), render_magnitude_pgm(m));
}

void write_comparison_artifacts(const std::filesystem::path& dir, const ComparisonReport& r) {
    io::write_file(dir / "phase_diff.csv", render_real_csv(r.phase_diff_matrix));
    io::write_file(dir / "phase_diff.pgm", render_phase_pgm(r.phase_diff_matrix));
}

void add_comparison(Report& report, const ComparisonReport& r) {
    report.add("max_abs_phase_diff", r.max_abs_phase_diff);
    report.add("mean_abs_phase_diff", r.mean_abs_phase_diff);
    report.add("max_abs_magnitude_rel_diff", r.max_abs_magnitude_rel_diff);
    report.add("zero_magnitude_cells", r.zero_magnitude_cells);
}

void add_focus(Report& report, std::string_view prefix, const FocusMetrics& f) {
    const std::string p(prefix);
    report.add(p + "peak_range_bin", f.peak_range_bin);
    report.add(p + "peak_azimuth_bin", f.peak_azimuth_bin);
    report.add(p + "peak_magnitude", f.peak_magnitude);
    report.add(p + "peak_to_median", f.median_magnitude > 0.0 ? f.peak_magnitude / f.median_magnitude : 0.0);
    report.add(p + "peak_energy_fraction", f.peak_energy_fraction);
}

struct RawInput {
    ComplexMatrix raw;
    SarParams params;
    std::vector<PointTarget> targets;  // empty when the raw data was loaded from a file
};

RawInput acquire_raw(const RunConfig& config) {
    if (!config.inputs.empty()) {
        ComplexMatrix raw = io::load_matrix(config.inputs.front());
        require_power_of_two(raw);
        SarParams params = resolve_params(config, raw.n_range());
        return {std::move(raw), params, {}};
    }
    const GridShape size = resolve_size(config);
    const SarParams params = resolve_params(config, size.n_range);
    std::vector<PointTarget> targets = resolve_targets(config);
    return {simulate_raw(params, targets, size.n_range, size.n_azimuth), params, std::move(targets)};
}

void add_expected_bins(Report& report, const RawInput& in) {
    if (in.targets.empty()) {
        return;
    }
    const auto [k, a] = expected_target_bins(in.params, in.targets.front(), in.raw.n_range(), in.raw.n_azimuth());
    report.add("target0_expected_range_bin", k);
    report.add("target0_expected_azimuth_bin", a);
}

int cmd_simulate_raw(const RunConfig& config, Report& report) {
    const GridShape size = resolve_size(config);
    const SarParams params = resolve_params(config, size.n_range);
    const std::vector<PointTarget> targets = resolve_targets(config);
    const ComplexMatrix raw = simulate_raw(params, targets, size.n_range, size.n_azimuth);
    write_matrix_artifacts(config.output_dir, "raw", raw);
    io::write_file(config.output_dir / "params.txt", io::format_params(params));
    report.add("n_range", raw.n_range());
    report.add("n_azimuth", raw.n_azimuth());
    report.add("targets", targets.size());
    report.add("energy", raw.energy());
    return kExitOk;
}

int cmd_rda(const RunConfig& config, Report& report) {
    const RawInput in = acquire_raw(config);
    PipelineOptions options;
    options.phase_only_range_reference = config.phase_only_range_ref;
    const ComplexMatrix image = run_classical(in.raw, in.params, options);
    write_matrix_artifacts(config.output_dir, "image", image);
    report.add("pipeline", std::string_view("rda"));
    add_focus(report, "", focus_metrics(image));
    add_expected_bins(report, in);
    return kExitOk;
}

int cmd_rda_hybrid(const RunConfig& config, Report& report) {
    const RawInput in = acquire_raw(config);
    PipelineOptions options;
    options.phase_only_range_reference = config.phase_only_range_ref;
    const ComplexMatrix hybrid = run_hybrid(in.raw, in.params, options);
    const ComplexMatrix classical = run_classical(in.raw, in.params, options);
    const ComparisonReport cmp = compare(hybrid, classical);
    const FocusMetrics fh = focus_metrics(hybrid);
    const FocusMetrics fc = focus_metrics(classical);

    write_matrix_artifacts(config.output_dir, "image", hybrid);
    write_comparison_artifacts(config.output_dir, cmp);
    const double tol = config.tolerance.value_or(default_tolerance(config.command));
    const bool peaks_match = fh.peak_range_bin == fc.peak_range_bin && fh.peak_azimuth_bin == fc.peak_azimuth_bin;

    report.add("pipeline", std::string_view("rda-hybrid"));
    add_focus(report, "hybrid_", fh);
    add_focus(report, "classical_", fc);
    add_expected_bins(report, in);
    add_comparison(report, cmp);
    report.add("peak_bins_match", peaks_match);
    report.add("tolerance", tol);
    const bool ok = cmp.max_abs_phase_diff < tol && peaks_match;
    report.add("within_tolerance", ok);
    return ok ? kExitOk : kExitToleranceBreach;
}

int cmd_qrda(const RunConfig& config, Report& report) {
    const RawInput in = acquire_raw(config);
    PipelineOptions options;
    options.phase_only_range_reference = config.phase_only_range_ref;
    double worst_norm_error = 0.0;
    options.hook = [&](std::string_view, Domain, double norm) {
        worst_norm_error = std::max(worst_norm_error, std::abs(norm - 1.0));
    };
    const ComplexMatrix quantum = run_qrda(in.raw, in.params, options);
    options.hook = nullptr;
    const ComplexMatrix classical = run_classical(in.raw, in.params, options);
    const ComparisonReport cmp = compare(quantum, classical);
    const double tol = config.tolerance.value_or(default_tolerance(config.command));
    const GateCensus census = build_qrda_circuit(in.params, {in.raw.n_range(), in.raw.n_azimuth()}, options).census();

    write_matrix_artifacts(config.output_dir, "image", quantum);
    write_comparison_artifacts(config.output_dir, cmp);
    report.add("pipeline", std::string_view("qrda"));
    add_focus(report, "", focus_metrics(quantum));
    add_expected_bins(report, in);
    add_comparison(report, cmp);
    report.add("max_state_norm_error", worst_norm_error);
    report.add("gates_hadamard", census.hadamard);
    report.add("gates_controlled_phase", census.controlled_phase);
    report.add("gates_swap", census.swap);
    report.add("gates_diagonal", census.diagonal);
    report.add("tolerance", tol);
    const bool ok = cmp.max_abs_phase_diff < tol;
    report.add("within_tolerance", ok);
    return ok ? kExitOk : kExitToleranceBreach;
}

int cmd_rcmc_isolated(const RunConfig& config, Report& report) {
    ComplexMatrix freq;
    if (!config.inputs.empty()) {
        freq = io::load_matrix(config.inputs.front()).retagged(Domain::RangeFreqDopplerFreq);
    } else {
        const GridShape size = resolve_size(config);
        freq = random_matrix(size.n_range, size.n_azimuth, config.seed, Domain::RangeFreqDopplerFreq);
    }
    require_power_of_two(freq);
    const SarParams params = resolve_params(config, freq.n_range());
    const RealMatrix theta = rcmc_filter(params, freq.n_range(), freq.n_azimuth());
    RealMatrix gate_theta = theta;
    for (double& v : gate_theta.values) {
        v += config.inject_phase_error;
    }

    const ComplexMatrix quantum = rcmc_isolated_quantum(freq, gate_theta);
    const ComplexMatrix classical = rcmc_isolated_classical(freq, theta);
    const ComparisonReport cmp = compare(quantum, classical);
    const double tol = config.tolerance.value_or(default_tolerance(config.command));

    io::write_file(config.output_dir / "phase_diff.csv", render_real_csv(cmp.phase_diff_matrix));
    io::write_file(config.output_dir / "phase_diff.pgm", render_phase_pgm(cmp.phase_diff_matrix));
    io::write_file(config.output_dir / "magnitude.pgm", render_magnitude_pgm(quantum));
    report.add("n_range", freq.n_range());
    report.add("n_azimuth", freq.n_azimuth());
    report.add("qubits", static_cast<std::size_t>(azimuth_qubits({freq.n_range(), freq.n_azimuth()}) +
                                                  range_qubits({freq.n_range(), freq.n_azimuth()})));
    add_comparison(report, cmp);
    report.add("tolerance", tol);
    const bool ok = cmp.max_abs_phase_diff < tol;
    report.add("within_tolerance", ok);
    return ok ? kExitOk : kExitToleranceBreach;
}

int cmd_compare(const RunConfig& config, Report& report) {
    const ComplexMatrix a = io::load_matrix(config.inputs.at(0));
    const ComplexMatrix b = io::load_matrix(config.inputs.at(1));
    const ComparisonReport cmp = compare(a, b);
    const double tol = config.tolerance.value_or(default_tolerance(config.command));
    write_comparison_artifacts(config.output_dir, cmp);
    add_comparison(report, cmp);
    report.add("tolerance", tol);
    const bool ok = cmp.max_abs_phase_diff < tol;
    report.add("within_tolerance", ok);
    return ok ? kExitOk : kExitToleranceBreach;
}

int cmd_qft_selftest(const RunConfig& config, Report& report) {
    constexpr int kVectorsPerSize = 20;
    const double tol = config.tolerance.value_or(default_tolerance(config.command));
    SeededRng rng(config.seed);
    bool ok = true;
    for (unsigned n = 1; n <= config.max_n; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        const Circuit qft = build_qft({n, false, true});
        double max_error = 0.0;
        for (int v = 0; v < kVectorsPerSize; ++v) {
            const std::vector<cplx> input = rng.complex_vector(dim);
            EncodedState enc = encode(ComplexMatrix(1, dim, input));
            run_circuit(enc.state, qft);
            const ComplexMatrix out = decode(enc);
            const std::vector<cplx> expected = dft_oracle(input);
            for (std::size_t i = 0; i < dim; ++i) {
                max_error = std::max(max_error, std::abs(out.data()[i] - expected[i]));
            }
        }
        const GateCensus census = qft.census();
        const QftGateCount formula = gate_count({n, false, true});
        const bool census_ok = census.hadamard == formula.hadamard &&
                               census.controlled_phase == formula.controlled_phase && census.swap == formula.swap;
        ok = ok && census_ok && max_error < tol;

        const std::string prefix = "n" + std::to_string(n) + "_";
        report.add(prefix + "max_error", max_error);
        report.add(prefix + "hadamard", census.hadamard);
        report.add(prefix + "controlled_phase", census.controlled_phase);
        report.add(prefix + "swap", census.swap);
        report.add(prefix + "census_matches_formula", census_ok);
    }
    report.add("tolerance", tol);
    report.add("within_tolerance", ok);
    return ok ? kExitOk : kExitToleranceBreach;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    for (const auto& [cmd, text] : kCommands) {
        if (text == name) {
            return cmd;
        }
    }
    return std::nullopt;
}

std::string_view to_string(Command c) {
    for (const auto& [cmd, text] : kCommands) {
        if (cmd == c) {
            return text;
        }
    }
    return "unknown";
}

GridShape parse_size(std::string_view text) {
    const auto x = text.find('x');
    if (x == std::string_view::npos) {
        throw UsageError("size must look like NRxNA, got '" + std::string(text) + "'");
    }
    auto number = [&](std::string_view part) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || v == 0) {
            throw UsageError("size must look like NRxNA, got '" + std::string(text) + "'");
        }
        return v;
    };
    return {number(text.substr(0, x)), number(text.substr(x + 1))};
}

double default_tolerance(Command c) {
    switch (c) {
        case Command::Qrda: return 1e-8;
        case Command::QftSelftest: return 1e-10;
        default: return 1e-9;
    }
}

void validate(const RunConfig& config) {
    auto must_exist = [](const std::filesystem::path& p, std::string_view what) {
        if (!std::filesystem::exists(p)) {
            throw UsageError(std::string(what) + " file does not exist: " + p.string());
        }
    };
    for (const auto& p : config.inputs) {
        must_exist(p, "input");
    }
    if (config.params_path) {
        must_exist(*config.params_path, "params");
    }
    if (config.targets_path) {
        must_exist(*config.targets_path, "targets");
    }
    const std::size_t max_inputs = config.command == Command::Compare ? 2 : 1;
    if (config.inputs.size() > max_inputs) {
        throw UsageError(std::string(to_string(config.command)) + " takes at most " + std::to_string(max_inputs) +
                         " input file(s)");
    }
    if (config.command == Command::Compare && config.inputs.size() != 2) {
        throw UsageError("compare needs two --input files");
    }
    if (config.command == Command::QftSelftest && (config.max_n < 1 || config.max_n > StateVector::kMaxQubits)) {
        throw UsageError("--max-n must be in [1, " + std::to_string(StateVector::kMaxQubits) + "]");
    }
    if (config.tolerance && !(*config.tolerance > 0.0)) {
        throw UsageError("--tolerance must be positive");
    }
}

CommandResult run_command(const RunConfig& config) {
    validate(config);
    std::filesystem::create_directories(config.output_dir);
    Report report;
    report.add("command", to_string(config.command));
    int code = kExitOk;
    switch (config.command) {
        case Command::SimulateRaw: code = cmd_simulate_raw(config, report); break;
        case Command::Rda: code = cmd_rda(config, report); break;
        case Command::RdaHybrid: code = cmd_rda_hybrid(config, report); break;
        case Command::Qrda: code = cmd_qrda(config, report); break;
        case Command::RcmcIsolated: code = cmd_rcmc_isolated(config, report); break;
        case Command::Compare: code = cmd_compare(config, report); break;
        case Command::QftSelftest: code = cmd_qft_selftest(config, report); break;
    }
    report.add("exit_code", static_cast<std::size_t>(code));
    io::write_file(config.output_dir / "report.txt", report.text());
    return {code, report.text()};
}

int run_main(int argc, const char* const* argv) {
    CLI::App app{"Classical, hybrid and quantum Range-Doppler SAR focusing"};
    app.set_config("--config", "", "key=value file mirroring the flags");

    std::string command;
    std::vector<std::string> inputs;
    std::string output_dir = ".";
    std::string params;
    std::string targets;
    std::string size;
    std::uint64_t seed = 1;
    double tolerance = 0.0;
    unsigned max_n = 10;
    bool phase_only = false;
    double inject = 0.0;

    std::vector<std::string> names;
    for (const auto& [cmd, text] : kCommands) {
        names.emplace_back(text);
    }
    app.add_option("--command", command, "command to run")->required()->check(CLI::IsMember(names));
    app.add_option("--input", inputs, "input matrix file (compare takes two)");
    app.add_option("--output-dir", output_dir, "directory for artifacts and report.txt");
    app.add_option("--params", params, "SAR parameter file (key=value)");
    app.add_option("--targets", targets, "point-target list (range_offset,azimuth_time,re,im per line)");
    app.add_option("--size", size, "grid size NRxNA (default 64x64)");
    app.add_option("--seed", seed, "seed for random fixtures");
    auto* tol_opt = app.add_option("--tolerance", tolerance, "override the command's pass tolerance");
    app.add_option("--max-n", max_n, "largest register for qft-selftest");
    app.add_flag("--phase-only-range-ref", phase_only, "use G/|G| as the range reference");
    app.add_option("--inject-phase-error", inject, "rcmc-isolated negative control: radians added to the gate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        RunConfig config;
        config.command = *parse_command(command);
        config.inputs.assign(inputs.begin(), inputs.end());
        config.output_dir = output_dir;
        if (!params.empty()) config.params_path = params;
        if (!targets.empty()) config.targets_path = targets;
        if (!size.empty()) config.size = parse_size(size);
        config.seed = seed;
        if (tol_opt->count() > 0) config.tolerance = tolerance;
        config.max_n = max_n;
        config.phase_only_range_ref = phase_only;
        config.inject_phase_error = inject;

        const CommandResult result = run_command(config);
        std::cout << result.report;
        return result.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

// ---- artifact renderers ----------------------------------------------------

std::string render_magnitude_pgm(const ComplexMatrix& m) {
    double peak = 0.0;
    for (const cplx& z : m.data()) {
        peak = std::max(peak, std::abs(z));
    }
    std::string out = pgm_header(m.n_azimuth(), m.n_range());
    for (const cplx& z : m.data()) {
        double level = 0.0;
        if (peak > 0.0 && std::abs(z) > 0.0) {
            level = 255.0 * (1.0 + 20.0 * std::log10(std::abs(z) / peak) / 60.0);
        }
        out.push_back(static_cast<char>(static_cast<unsigned char>(std::clamp(std::round(level), 0.0, 255.0))));
    }
    return out;
}

std::string render_phase_pgm(const RealMatrix& phases) {
    std::string out = pgm_header(phases.n_cols, phases.n_rows);
    for (double phi : phases.values) {
        const double level = (phi + std::numbers::pi) / (2.0 * std::numbers::pi) * 255.0;
        out.push_back(static_cast<char>(static_cast<unsigned char>(std::clamp(std::round(level), 0.0, 255.0))));
    }
    return out;
}

std::string render_real_csv(const RealMatrix& m) {
    std::string out;
    char buf[32];
    for (std::size_t r = 0; r < m.n_rows; ++r) {
        for (std::size_t c = 0; c < m.n_cols; ++c) {
            if (c > 0) {
                out.push_back(',');
            }
            const int n = std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
            out.append(buf, static_cast<std::size_t>(n));
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace qsar::cli
