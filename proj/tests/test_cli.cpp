#include "qsar/cli.hpp"
#include "qsar/matrix_io.hpp"
#include "qsar/params_io.hpp"
#include "qsar/random.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <map>

#include <unistd.h>

namespace {

namespace cli = qsar::cli;
namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("qsar_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::map<std::string, std::string> parse_report(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string line = text.substr(pos, end - pos);
        const std::size_t eq = line.find('=');
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
        pos = end == std::string::npos ? text.size() : end + 1;
    }
    return kv;
}

int run_argv(std::vector<std::string> args) {
    args.insert(args.begin(), "qsar");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::run_main(static_cast<int>(argv.size()), argv.data());
}

cli::RunConfig config(cli::Command c, const fs::path& out) {
    cli::RunConfig cfg;
    cfg.command = c;
    cfg.output_dir = out;
    return cfg;
}

TEST(ParseSize, Accepts) {
    const qsar::GridShape s = cli::parse_size("64x32");
    EXPECT_EQ(s.n_range, 64u);
    EXPECT_EQ(s.n_azimuth, 32u);
}

TEST(ParseSize, Rejects) {
    for (const char* bad : {"64", "x64", "64x", "0x8", "8x8x8", "ax4"}) EXPECT_THROW(cli::parse_size(bad), cli::UsageError) << bad;
}

TEST(Commands, NamesRoundTrip) {
    for (const char* name : {"simulate-raw", "rda", "rda-hybrid", "qrda", "rcmc-isolated", "compare", "qft-selftest"}) {
        const auto c = cli::parse_command(name);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(cli::to_string(*c), name);
    }
    EXPECT_FALSE(cli::parse_command("focus").has_value());
}

TEST(RcmcIsolated, RandomInputPasses) {
    const fs::path out = fresh_dir("rcmc");
    const cli::CommandResult r = cli::run_command(config(cli::Command::RcmcIsolated, out));
    EXPECT_EQ(r.exit_code, cli::kExitOk);
    const auto kv = parse_report(r.report);
    EXPECT_LT(std::stod(kv.at("max_abs_phase_diff")), 1e-9);
    EXPECT_EQ(kv.at("qubits"), "12");
    EXPECT_TRUE(fs::exists(out / "phase_diff.csv"));
    EXPECT_TRUE(fs::exists(out / "magnitude.pgm"));
    EXPECT_TRUE(fs::exists(out / "report.txt"));
}

TEST(RcmcIsolated, CorruptedThetaBreaches) {
    cli::RunConfig cfg = config(cli::Command::RcmcIsolated, fresh_dir("rcmc_bad"));
    cfg.inject_phase_error = 1e-6;
    const cli::CommandResult r = cli::run_command(cfg);
    EXPECT_EQ(r.exit_code, cli::kExitToleranceBreach);
    EXPECT_EQ(parse_report(r.report).at("within_tolerance"), "false");
}

TEST(Compare, SelfCompareIsZero) {
    const fs::path out = fresh_dir("self");
    const fs::path m = out / "m.qsar";
    qsar::io::store_matrix(qsar::random_matrix(8, 8, 3), m);
    cli::RunConfig cfg = config(cli::Command::Compare, out);
    cfg.inputs = {m, m};
    const cli::CommandResult r = cli::run_command(cfg);
    EXPECT_EQ(r.exit_code, cli::kExitOk);
    const auto kv = parse_report(r.report);
    EXPECT_EQ(std::stod(kv.at("max_abs_phase_diff")), 0.0);
    EXPECT_EQ(std::stod(kv.at("mean_abs_phase_diff")), 0.0);
    EXPECT_EQ(std::stod(kv.at("max_abs_magnitude_rel_diff")), 0.0);
}

TEST(Compare, NeedsTwoInputs) {
    const fs::path out = fresh_dir("one");
    const fs::path m = out / "m.qsar";
    qsar::io::store_matrix(qsar::random_matrix(2, 2, 3), m);
    cli::RunConfig cfg = config(cli::Command::Compare, out);
    cfg.inputs = {m};
    EXPECT_THROW(cli::run_command(cfg), cli::UsageError);
}

TEST(Pipelines, HybridEightByEight) {
    cli::RunConfig cfg = config(cli::Command::RdaHybrid, fresh_dir("hybrid"));
    cfg.size = qsar::GridShape{8, 8};
    const cli::CommandResult r = cli::run_command(cfg);
    EXPECT_EQ(r.exit_code, cli::kExitOk);
    EXPECT_LT(std::stod(parse_report(r.report).at("max_abs_phase_diff")), 1e-9);
}

TEST(Pipelines, RdaPeakMatchesTarget) {
    const cli::CommandResult r = cli::run_command(config(cli::Command::Rda, fresh_dir("rda")));
    const auto kv = parse_report(r.report);
    EXPECT_EQ(r.exit_code, cli::kExitOk);
    EXPECT_EQ(kv.at("peak_range_bin"), kv.at("target0_expected_range_bin"));
    EXPECT_EQ(kv.at("peak_azimuth_bin"), kv.at("target0_expected_azimuth_bin"));
}

TEST(Pipelines, QrdaPhaseOnlyPasses) {
    cli::RunConfig cfg = config(cli::Command::Qrda, fresh_dir("qrda"));
    cfg.size = qsar::GridShape{16, 16};
    cfg.phase_only_range_ref = true;
    EXPECT_EQ(cli::run_command(cfg).exit_code, cli::kExitOk);
}

TEST(Pipelines, SimulatedRawFeedsRda) {
    const fs::path out = fresh_dir("chain");
    cli::RunConfig sim = config(cli::Command::SimulateRaw, out / "sim");
    sim.size = qsar::GridShape{32, 32};
    ASSERT_EQ(cli::run_command(sim).exit_code, cli::kExitOk);
    cli::RunConfig rda = config(cli::Command::Rda, out / "rda");
    rda.inputs = {out / "sim" / "raw.qsar"};
    rda.params_path = out / "sim" / "params.txt";
    const auto kv = parse_report(cli::run_command(rda).report);
    EXPECT_EQ(kv.at("peak_range_bin"), "8");
    EXPECT_EQ(kv.at("peak_azimuth_bin"), "16");
}

TEST(Pipelines, ArtifactsAreDeterministic) {
    cli::RunConfig a = config(cli::Command::RdaHybrid, fresh_dir("det_a"));
    cli::RunConfig b = config(cli::Command::RdaHybrid, fresh_dir("det_b"));
    a.size = b.size = qsar::GridShape{16, 16};
    cli::run_command(a);
    cli::run_command(b);
    for (const char* f : {"image.qsar", "image_magnitude.pgm", "phase_diff.csv", "phase_diff.pgm", "report.txt"}) {
        EXPECT_EQ(qsar::io::read_file(a.output_dir / f), qsar::io::read_file(b.output_dir / f)) << f;
    }
}

TEST(QftSelftest, DefaultRunPasses) {
    const cli::CommandResult r = cli::run_command(config(cli::Command::QftSelftest, fresh_dir("qft")));
    EXPECT_EQ(r.exit_code, cli::kExitOk);
    const auto kv = parse_report(r.report);
    for (unsigned n = 1; n <= 10; ++n) {
        const std::string p = "n" + std::to_string(n) + "_";
        EXPECT_LT(std::stod(kv.at(p + "max_error")), 1e-10);
        EXPECT_EQ(std::stoul(kv.at(p + "hadamard")), n);
        EXPECT_EQ(std::stoul(kv.at(p + "controlled_phase")), n * (n - 1) / 2);
        EXPECT_EQ(std::stoul(kv.at(p + "swap")), n / 2);
    }
    EXPECT_EQ(kv.at("n1_controlled_phase"), "0");
    EXPECT_EQ(kv.count("n11_max_error"), 0u);
}

TEST(RunMain, ExitCodes) {
    const fs::path out = fresh_dir("main");
    EXPECT_EQ(run_argv({"--command", "qft-selftest", "--max-n", "4", "--output-dir", out.string()}), cli::kExitOk);
    EXPECT_EQ(run_argv({"--command", "rcmc-isolated", "--size", "8x8", "--inject-phase-error", "0.01",
                        "--output-dir", out.string()}),
              cli::kExitToleranceBreach);
    EXPECT_EQ(run_argv({"--command", "nope"}), cli::kExitUsage);
    EXPECT_EQ(run_argv({"--output-dir", out.string()}), cli::kExitUsage);
    EXPECT_EQ(run_argv({"--command", "rda", "--size", "48x64", "--output-dir", out.string()}), cli::kExitUsage);
    EXPECT_EQ(run_argv({"--command", "qrda", "--size", "8x8", "--output-dir", out.string()}), cli::kExitUsage);
    EXPECT_EQ(run_argv({"--command", "rda", "--input", (out / "missing.qsar").string(), "--output-dir", out.string()}),
              cli::kExitUsage);
}

TEST(RunMain, NonPowerOfTwoInputRejectedBeforeCompute) {
    const fs::path out = fresh_dir("npot");
    qsar::io::store_matrix(qsar::random_matrix(6, 8, 1), out / "m.qsar");
    EXPECT_EQ(run_argv({"--command", "rda-hybrid", "--input", (out / "m.qsar").string(), "--output-dir",
                        (out / "o").string()}),
              cli::kExitUsage);
    EXPECT_FALSE(fs::exists(out / "o" / "image.qsar"));
}

TEST(RunMain, BadMatrixFileIsUsageError) {
    const fs::path out = fresh_dir("badfile");
    qsar::io::write_file(out / "m.qsar", "QSAR\x01");
    EXPECT_EQ(run_argv({"--command", "rda", "--input", (out / "m.qsar").string(), "--output-dir", out.string()}),
              cli::kExitUsage);
}

TEST(RunMain, ConfigFileMirrorsFlags) {
    const fs::path out = fresh_dir("config");
    qsar::io::write_file(out / "run.ini", "command=rcmc-isolated\nsize=16x16\nseed=5\noutput-dir=" +
                                              (out / "o").string() + "\n");
    EXPECT_EQ(run_argv({"--config", (out / "run.ini").string()}), cli::kExitOk);
    const auto kv = parse_report(qsar::io::read_file(out / "o" / "report.txt"));
    EXPECT_EQ(kv.at("n_range"), "16");
}

// ---- renderers -------------------------------------------------------------

TEST(Render, MagnitudePgmMapping) {
    const qsar::ComplexMatrix m(2, 3, {1.0, 0.1, 0.001, 1e-4, 0.0, qsar::cplx(0.0, 0.5)});
    const std::string pgm = cli::render_magnitude_pgm(m);
    const std::string header = "P5\n3 2\n255\n";
    ASSERT_EQ(pgm.substr(0, header.size()), header);
    const auto px = [&](std::size_t i) { return static_cast<unsigned char>(pgm[header.size() + i]); };
    EXPECT_EQ(px(0), 255);  // peak
    EXPECT_EQ(px(1), 170);  // -20 dB: 255 * 2/3
    EXPECT_EQ(px(2), 0);    // -60 dB
    EXPECT_EQ(px(3), 0);    // below the window
    EXPECT_EQ(px(4), 0);    // exact zero
    EXPECT_EQ(px(5), 229);  // -6.02 dB: round(255 * (1 - 6.0206 / 60))
}

TEST(Render, AllZeroIsBlack) {
    const std::string pgm = cli::render_magnitude_pgm(qsar::ComplexMatrix(2, 2));
    EXPECT_EQ(pgm.substr(pgm.size() - 4), std::string(4, '\0'));
}

TEST(Render, PhasePgmMapping) {
    qsar::RealMatrix phases(1, 3);
    phases.values = {-std::numbers::pi, 0.0, std::numbers::pi};
    const std::string pgm = cli::render_phase_pgm(phases);
    const std::string header = "P5\n3 1\n255\n";
    ASSERT_EQ(pgm.substr(0, header.size()), header);
    EXPECT_EQ(static_cast<unsigned char>(pgm[header.size()]), 0);
    EXPECT_EQ(static_cast<unsigned char>(pgm[header.size() + 1]), 128);
    EXPECT_EQ(static_cast<unsigned char>(pgm[header.size() + 2]), 255);
}

TEST(Render, RealCsv) {
    qsar::RealMatrix m(2, 2);
    m.values = {0.1, -2.0, 0.0, 1e-20};
    EXPECT_EQ(cli::render_real_csv(m), "0.10000000000000001,-2\n0,9.9999999999999995e-21\n");
}

}  // namespace
