#pragma once

#include "qsar/complex_matrix.hpp"
#include "qsar/encoding.hpp"
#include "qsar/errors.hpp"
#include "qsar/sar_signal.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsar::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceBreach = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, missing files or an unusable combination of options.
class UsageError : public Error {
public:
    using Error::Error;
};

enum class Command { SimulateRaw, Rda, RdaHybrid, Qrda, RcmcIsolated, Compare, QftSelftest };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);

struct RunConfig {
    Command command = Command::QftSelftest;
    std::vector<std::filesystem::path> inputs;
    std::filesystem::path output_dir = ".";
    std::optional<std::filesystem::path> params_path;
    std::optional<std::filesystem::path> targets_path;
    std::optional<GridShape> size;
    std::uint64_t seed = 1;
    std::optional<double> tolerance;
    unsigned max_n = 10;
    bool phase_only_range_ref = false;
    /// Added to every angle of the quantum RCMC gate in rcmc-isolated; a
    /// non-zero value is a negative control that must trip the tolerance.
    double inject_phase_error = 0.0;
};

/// "64x64" -> {64, 64}. Throws UsageError.
GridShape parse_size(std::string_view text);

/// Checks the command's required inputs exist. Throws UsageError.
void validate(const RunConfig& config);

double default_tolerance(Command c);

struct CommandResult {
    int exit_code = kExitOk;
    /// key=value lines, also written to <output_dir>/report.txt.
    std::string report;
};

/// Runs one command and writes its artifacts into config.output_dir.
/// Library errors propagate as exceptions.
CommandResult run_command(const RunConfig& config);

/// Full front end: parses argv (flags or --config key=value file), runs the
/// command, prints the report and maps failures onto the exit codes.
int run_main(int argc, const char* const* argv);

// ---- artifact renderers ----------------------------------------------------

/// Binary PGM (P5), width N_a, height N_r. Gray level
/// 255 * (1 + 20 log10(|x| / peak) / 60), clamped to [0, 255]: a 60 dB window
/// below the peak. An all-zero matrix renders black.
std::string render_magnitude_pgm(const ComplexMatrix& m);

/// Binary PGM of a phase grid with the linear mapping (-pi, pi] -> [0, 255]:
/// level = round((phi + pi) / (2 pi) * 255).
std::string render_phase_pgm(const RealMatrix& phases);

/// One CSV row per matrix row, 17 significant digits.
std::string render_real_csv(const RealMatrix& m);

}  // namespace qsar::cli
