#include "qsar/errors.hpp"
#include "qsar/fft.hpp"
#include "qsar/random.hpp"
#include "qsar/rda.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace {

using oracle::cplx;
using qsar::ComplexMatrix;
using qsar::Domain;
using qsar::PointTarget;
using qsar::SarParams;

ComplexMatrix single_target_raw(std::size_t nr, std::size_t na, const PointTarget& t = {}) {
    const std::vector<PointTarget> targets{t};
    return qsar::simulate_raw(qsar::desk_scale_params(nr), targets, nr, na);
}

ComplexMatrix random_in(Domain d, std::size_t nr, std::size_t na, std::uint64_t seed) {
    return qsar::random_matrix(nr, na, seed, d);
}

double max_rel_magnitude_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ma = std::abs(a.data()[i]);
        const double mb = std::abs(b.data()[i]);
        if (std::max(ma, mb) > 0.0) worst = std::max(worst, std::abs(ma - mb) / std::max(ma, mb));
    }
    return worst;
}

// ---- classical stages ------------------------------------------------------

TEST(RangeCompress, ZeroInZeroOut) {
    const ComplexMatrix out = qsar::range_compress(ComplexMatrix(16, 8), qsar::desk_scale_params(16));
    EXPECT_EQ(out.energy(), 0.0);
    EXPECT_EQ(out.domain(), Domain::TimeTime);
}

TEST(RangeCompress, Linear) {
    const SarParams p = qsar::desk_scale_params(32);
    const ComplexMatrix a = random_in(Domain::TimeTime, 32, 8, 1);
    const ComplexMatrix b = random_in(Domain::TimeTime, 32, 8, 2);
    ComplexMatrix sum = a;
    for (std::size_t i = 0; i < sum.size(); ++i) sum.data()[i] += b.data()[i];
    const ComplexMatrix ca = qsar::range_compress(a, p);
    const ComplexMatrix cb = qsar::range_compress(b, p);
    const ComplexMatrix cs = qsar::range_compress(sum, p);
    for (std::size_t i = 0; i < cs.size(); ++i) EXPECT_LT(std::abs(cs.data()[i] - ca.data()[i] - cb.data()[i]), 1e-10);
}

TEST(RangeCompress, WrongDomainRejected) {
    EXPECT_THROW(qsar::range_compress(random_in(Domain::TimeDopplerFreq, 8, 8, 3), qsar::desk_scale_params(8)),
                 qsar::PipelineOrderError);
}

TEST(AzimuthFft, ConstantLinesLandInDcColumn) {
    ComplexMatrix m(8, 16);
    oracle::Rand rng(4);
    for (std::size_t k = 0; k < 8; ++k) {
        const cplx v = rng.complex();
        for (std::size_t a = 0; a < 16; ++a) m(k, a) = v;
    }
    const ComplexMatrix f = qsar::azimuth_fft(m);
    EXPECT_EQ(f.domain(), Domain::TimeDopplerFreq);
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_LT(std::abs(f(k, 0) - m(k, 0) * 4.0), 1e-13);
        for (std::size_t a = 1; a < 16; ++a) EXPECT_LT(std::abs(f(k, a)), 1e-13);
    }
}

TEST(AzimuthFft, RoundTrip) {
    const ComplexMatrix m = random_in(Domain::TimeTime, 16, 32, 5);
    const ComplexMatrix back = qsar::azimuth_ifft(qsar::azimuth_fft(m));
    EXPECT_EQ(back.domain(), Domain::TimeTime);
    EXPECT_LT(oracle::max_abs_diff(back.data(), m.data()), 1e-10);
}

TEST(AzimuthFft, MatchesPerLineDft) {
    const ComplexMatrix m = random_in(Domain::TimeTime, 8, 16, 6);
    EXPECT_LT(oracle::max_abs_diff(qsar::azimuth_fft(m).data(), oracle::dft_rows(m)), 1e-12);
}

TEST(AzimuthFft, DomainTransitionsEnforced) {
    EXPECT_THROW(qsar::azimuth_fft(random_in(Domain::TimeDopplerFreq, 8, 8, 7)), qsar::PipelineOrderError);
    EXPECT_THROW(qsar::azimuth_ifft(random_in(Domain::TimeTime, 8, 8, 7)), qsar::PipelineOrderError);
    EXPECT_THROW(qsar::range_fft(random_in(Domain::RangeFreqTime, 8, 8, 7)), qsar::PipelineOrderError);
    EXPECT_THROW(qsar::range_ifft(random_in(Domain::TimeTime, 8, 8, 7)), qsar::PipelineOrderError);
    EXPECT_EQ(qsar::range_fft(random_in(Domain::TimeDopplerFreq, 8, 8, 7)).domain(), Domain::RangeFreqDopplerFreq);
}

TEST(ApplyRcmcClassical, ZeroThetaIsIdentity) {
    SarParams p = qsar::desk_scale_params(16);
    p.reference_range = 1e-30;
    const ComplexMatrix m = random_in(Domain::TimeDopplerFreq, 16, 16, 8);
    EXPECT_LT(oracle::max_abs_diff(qsar::apply_rcmc_classical(m, p).data(), m.data()), 1e-12);
}

TEST(ApplyRcmcClassical, RangeSpectrumMagnitudeUnchanged) {
    const SarParams p = qsar::desk_scale_params(16);
    const ComplexMatrix m = random_in(Domain::TimeDopplerFreq, 16, 16, 9);
    const ComplexMatrix before = qsar::range_fft(m);
    const ComplexMatrix after = qsar::range_fft(qsar::apply_rcmc_classical(m, p));
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_NEAR(std::abs(after.data()[i]), std::abs(before.data()[i]), 1e-12);
}

TEST(ApplyRcmcClassical, WrongDomainRejected) {
    EXPECT_THROW(qsar::apply_rcmc_classical(random_in(Domain::TimeTime, 8, 8, 10), qsar::desk_scale_params(8)),
                 qsar::PipelineOrderError);
}

TEST(AzimuthCompress, UnitFilterIsPlainInverseTransform) {
    SarParams p = qsar::desk_scale_params(8);
    p.reference_range = 1e-30;  // H = exp(i 4 pi R0 D / lambda) -> 1
    const ComplexMatrix m = random_in(Domain::TimeDopplerFreq, 8, 8, 11);
    EXPECT_LT(oracle::max_abs_diff(qsar::azimuth_compress(m, p).data(), oracle::dft_rows(m, true)), 1e-12);
}

TEST(AzimuthCompress, ConservesEnergy) {
    const ComplexMatrix m = random_in(Domain::TimeDopplerFreq, 32, 32, 12);
    const ComplexMatrix out = qsar::azimuth_compress(m, qsar::desk_scale_params(32));
    EXPECT_EQ(out.domain(), Domain::TimeTime);
    EXPECT_NEAR(out.energy(), m.energy(), 1e-10 * m.energy());
}

// ---- classical pipeline ----------------------------------------------------

TEST(RunClassical, ZeroRawZeroImage) {
    EXPECT_EQ(qsar::run_classical(ComplexMatrix(16, 16), qsar::desk_scale_params(16)).energy(), 0.0);
}

TEST(RunClassical, SingleTargetFocusesAtConfiguredBin) {
    const SarParams p = qsar::desk_scale_params(64);
    const PointTarget t{};
    const qsar::FocusMetrics f = qsar::focus_metrics(qsar::run_classical(single_target_raw(64, 64, t), p));
    const auto [k, a] = qsar::expected_target_bins(p, t, 64, 64);
    EXPECT_EQ(f.peak_range_bin, k);
    EXPECT_EQ(f.peak_azimuth_bin, a);
    EXPECT_GE(f.peak_magnitude, 10.0 * f.median_magnitude);
}

TEST(RunClassical, TwoSeparatedTargets) {
    const SarParams p = qsar::desk_scale_params(64);
    const PointTarget t1{-0.3, -0.03, 1.0};
    const PointTarget t2{0.5, 0.04, {0.0, 1.0}};
    const std::vector<PointTarget> both{t1, t2};
    const ComplexMatrix image = qsar::run_classical(qsar::simulate_raw(p, both, 64, 64), p);
    for (const PointTarget& t : both) {
        const auto [k, a] = qsar::expected_target_bins(p, t, 64, 64);
        double local_peak = 0.0;
        std::pair<std::size_t, std::size_t> where{};
        for (std::size_t dk = 0; dk < 7; ++dk)
            for (std::size_t da = 0; da < 7; ++da) {
                const std::size_t kk = (k + 64 + dk - 3) % 64;
                const std::size_t aa = (a + 64 + da - 3) % 64;
                if (std::abs(image(kk, aa)) > local_peak) {
                    local_peak = std::abs(image(kk, aa));
                    where = {kk, aa};
                }
            }
        EXPECT_EQ(where, std::pair(k, a));
    }
}

TEST(RunClassical, RcmcImprovesFocus) {
    const SarParams p = qsar::desk_scale_params(64);
    const ComplexMatrix raw = single_target_raw(64, 64);
    qsar::PipelineOptions off;
    off.rcmc_enabled = false;
    EXPECT_GT(qsar::focus_metrics(qsar::run_classical(raw, p)).peak_energy_fraction,
              qsar::focus_metrics(qsar::run_classical(raw, p, off)).peak_energy_fraction);
}

TEST(RunClassical, GlobalPhaseCarriesThrough) {
    const SarParams p = qsar::desk_scale_params(32);
    const ComplexMatrix raw = single_target_raw(32, 32);
    ComplexMatrix rotated = raw;
    const cplx g = std::polar(1.0, 0.77);
    for (cplx& z : rotated.data()) z *= g;
    const ComplexMatrix a = qsar::run_classical(raw, p);
    const ComplexMatrix b = qsar::run_classical(rotated, p);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(std::abs(b.data()[i] - g * a.data()[i]), 1e-10);
}

TEST(RunClassical, Deterministic) {
    const SarParams p = qsar::desk_scale_params(64);
    const ComplexMatrix raw = single_target_raw(64, 64);
    EXPECT_EQ(qsar::run_classical(raw, p), qsar::run_classical(raw, p));
    EXPECT_EQ(qsar::run_hybrid(raw, p), qsar::run_hybrid(raw, p));
}

// ---- U_RCMC ----------------------------------------------------------------

TEST(BuildURcmc, BlockModeTwoByTwo) {
    const double t1 = 0.3;
    const double t2 = -2.1;
    const qsar::gate::Diagonal d = qsar::build_u_rcmc(qsar::RcmcGateSpec::block({2, 2}, {t1, t2}));
    EXPECT_EQ(d.phases, (std::vector<double>{t1, t1, t2, t2}));
}

TEST(BuildURcmc, BlockModeAppliedToAmplitudes) {
    oracle::Rand rng(13);
    const auto alpha = rng.unit(4);
    const double t1 = rng.angle();
    const double t2 = rng.angle();
    qsar::StateVector s = qsar::StateVector::from_amplitudes(alpha);
    qsar::apply(s, qsar::build_u_rcmc(qsar::RcmcGateSpec::block({2, 2}, {t1, t2})));
    const cplx expected[4] = {std::polar(1.0, t1) * alpha[0], std::polar(1.0, t1) * alpha[1],
                              std::polar(1.0, t2) * alpha[2], std::polar(1.0, t2) * alpha[3]};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(std::abs(s[i] - expected[i]), 1e-15);
}

TEST(BuildURcmc, BlockRowsShareOnePhase) {
    oracle::Rand rng(14);
    const qsar::GridShape shape{4, 8};
    const auto theta = rng.angles(4);
    const qsar::gate::Diagonal d = qsar::build_u_rcmc(qsar::RcmcGateSpec::block(shape, theta));
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t a = 0; a < 8; ++a) {
            ComplexMatrix onehot(4, 8);
            onehot(k, a) = 1.0;
            qsar::EncodedState enc = qsar::encode(onehot);
            qsar::apply(enc.state, d);
            EXPECT_LT(std::abs(qsar::decode(enc)(k, a) - std::polar(1.0, theta[k])), 1e-15);
        }
    }
}

TEST(BuildURcmc, FullGridFlattensRowMajor) {
    qsar::RealMatrix theta(2, 4);
    for (std::size_t i = 0; i < 8; ++i) theta.values[i] = 0.1 * static_cast<double>(i);
    const qsar::gate::Diagonal d = qsar::build_u_rcmc(qsar::RcmcGateSpec::full_grid(theta));
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(d.phases[qsar::flat_index({2, 4}, k, a)], theta(k, a));
}

TEST(BuildURcmc, NegatedPhasesUndo) {
    oracle::Rand rng(15);
    const auto theta = rng.angles(8);
    std::vector<double> neg(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) neg[i] = -theta[i];
    const auto input = rng.unit(64);
    qsar::StateVector s = qsar::StateVector::from_amplitudes(input);
    qsar::apply(s, qsar::build_u_rcmc(qsar::RcmcGateSpec::block({8, 8}, theta)));
    qsar::apply(s, qsar::build_u_rcmc(qsar::RcmcGateSpec::block({8, 8}, neg)));
    EXPECT_LT(oracle::max_abs_diff(s.amplitudes(), input), 1e-12);
}

TEST(BuildURcmc, PhaseCountChecked) {
    EXPECT_THROW(qsar::build_u_rcmc(qsar::RcmcGateSpec::block({4, 4}, {0.1, 0.2})), qsar::ShapeError);
}

TEST(DiagonalFromFilter, RejectsNonUnitFilter) {
    const std::vector<cplx> g = qsar::range_reference(qsar::desk_scale_params(16), 16);
    EXPECT_THROW(qsar::diagonal_from_filter(g, {16, 4}, true), qsar::NonUnitaryFilterError);
}

TEST(DiagonalFromFilter, LaysOutAlongChosenAxis) {
    const std::vector<cplx> f{std::polar(1.0, 0.5), std::polar(1.0, -1.0)};
    const auto along_range = qsar::diagonal_from_filter(f, {2, 2}, true);
    const auto along_azimuth = qsar::diagonal_from_filter(f, {2, 2}, false);
    const std::vector<double> r{0.5, 0.5, -1.0, -1.0};
    const std::vector<double> a{0.5, -1.0, 0.5, -1.0};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(along_range.phases[i], r[i], 1e-15);
        EXPECT_NEAR(along_azimuth.phases[i], a[i], 1e-15);
    }
}

// ---- quantum RCMC ----------------------------------------------------------

TEST(RcmcIsolated, QuantumMatchesClassical) {
    const SarParams p = qsar::desk_scale_params(64);
    const qsar::RealMatrix theta = qsar::rcmc_filter(p, 64, 64);
    const ComplexMatrix m = random_in(Domain::RangeFreqDopplerFreq, 64, 64, 16);
    const qsar::ComparisonReport r =
        qsar::compare(qsar::rcmc_isolated_quantum(m, theta), qsar::rcmc_isolated_classical(m, theta));
    EXPECT_LT(r.max_abs_phase_diff, 1e-9);
    EXPECT_LT(r.max_abs_magnitude_rel_diff, 1e-12);
}

TEST(ApplyRcmcQuantum, MatchesClassicalOnRandom) {
    const SarParams p = qsar::desk_scale_params(8);
    for (std::uint64_t seed = 20; seed < 25; ++seed) {
        const ComplexMatrix m = random_in(Domain::TimeDopplerFreq, 8, 8, seed);
        const ComplexMatrix q = qsar::apply_rcmc_quantum(m, p);
        const ComplexMatrix c = qsar::apply_rcmc_classical(m, p);
        EXPECT_EQ(q.domain(), Domain::TimeDopplerFreq);
        EXPECT_LT(qsar::compare(q, c).max_abs_phase_diff, 1e-9);
        EXPECT_LT(oracle::max_abs_diff(q.data(), c.data()), 1e-9);
    }
}

TEST(ApplyRcmcQuantum, ZeroThetaIsIdentity) {
    SarParams p = qsar::desk_scale_params(16);
    p.reference_range = 1e-30;
    const ComplexMatrix m = random_in(Domain::TimeDopplerFreq, 16, 16, 26);
    const ComplexMatrix q = qsar::apply_rcmc_quantum(m, p);
    EXPECT_LT(oracle::max_abs_diff(q.data(), m.data()), 1e-12);
}

TEST(ApplyRcmcQuantum, RangeSpectrumMagnitudeUnchanged) {
    const SarParams p = qsar::desk_scale_params(16);
    const ComplexMatrix m = random_in(Domain::TimeDopplerFreq, 16, 16, 27);
    const ComplexMatrix before = qsar::range_fft(m);
    const ComplexMatrix after = qsar::range_fft(qsar::apply_rcmc_quantum(m, p));
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_NEAR(std::abs(after.data()[i]), std::abs(before.data()[i]), 1e-12);
}

TEST(ApplyRcmcQuantum, ZeroInputRejected) {
    EXPECT_THROW(qsar::apply_rcmc_quantum(ComplexMatrix(8, 8, Domain::TimeDopplerFreq), qsar::desk_scale_params(8)),
                 qsar::DegenerateInputError);
}

TEST(ApplyRcmcQuantum, NormReportedPerStage) {
    std::vector<std::string> stages;
    double worst = 0.0;
    const qsar::StageHook hook = [&](std::string_view s, Domain, double norm) {
        stages.emplace_back(s);
        worst = std::max(worst, std::abs(norm - 1.0));
    };
    (void)qsar::apply_rcmc_quantum(random_in(Domain::TimeDopplerFreq, 8, 8, 28), qsar::desk_scale_params(8), hook);
    EXPECT_EQ(stages, (std::vector<std::string>{"encode", "u_rcmc"}));
    EXPECT_LT(worst, 1e-12);
}

// ---- hybrid ----------------------------------------------------------------

class HybridVsClassical : public ::testing::TestWithParam<std::size_t> {};

TEST_P(HybridVsClassical, PhaseAndPeakAgree) {
    const std::size_t n = GetParam();
    const SarParams p = qsar::desk_scale_params(n);
    const ComplexMatrix raw = single_target_raw(n, n);
    const ComplexMatrix h = qsar::run_hybrid(raw, p);
    const ComplexMatrix c = qsar::run_classical(raw, p);
    const qsar::ComparisonReport r = qsar::compare(h, c);
    EXPECT_LT(r.max_abs_phase_diff, 1e-9);
    EXPECT_LT(max_rel_magnitude_diff(h, c), 1e-9);
    const qsar::FocusMetrics fh = qsar::focus_metrics(h);
    const qsar::FocusMetrics fc = qsar::focus_metrics(c);
    EXPECT_EQ(fh.peak_range_bin, fc.peak_range_bin);
    EXPECT_EQ(fh.peak_azimuth_bin, fc.peak_azimuth_bin);
}

INSTANTIATE_TEST_SUITE_P(Sizes, HybridVsClassical, ::testing::Values(8u, 16u, 64u));

TEST(RunHybrid, ZeroRawRejectedAtEncode) {
    EXPECT_THROW(qsar::run_hybrid(ComplexMatrix(8, 8), qsar::desk_scale_params(8)), qsar::DegenerateInputError);
}

// ---- full quantum chain ----------------------------------------------------

TEST(RunQrda, MatchesClassicalWithPhaseOnlyReference) {
    const SarParams p = qsar::desk_scale_params(16);
    qsar::PipelineOptions opt;
    opt.phase_only_range_reference = true;
    const ComplexMatrix raw = single_target_raw(16, 16);
    const ComplexMatrix q = qsar::run_qrda(raw, p, opt);
    const ComplexMatrix c = qsar::run_classical(raw, p, opt);
    EXPECT_LT(oracle::max_abs_diff(q.data(), c.data()), 1e-8);
    EXPECT_LT(qsar::compare(q, c).max_abs_phase_diff, 1e-8);
}

TEST(RunQrda, MatchedReferenceRejected) {
    EXPECT_THROW(qsar::run_qrda(single_target_raw(8, 8), qsar::desk_scale_params(8)), qsar::NonUnitaryFilterError);
}

TEST(RunQrda, NormOneAfterEveryStage) {
    qsar::PipelineOptions opt;
    opt.phase_only_range_reference = true;
    std::vector<std::string> stages;
    opt.hook = [&](std::string_view s, Domain, double norm) {
        stages.emplace_back(s);
        EXPECT_NEAR(norm, 1.0, 1e-12) << s;
    };
    (void)qsar::run_qrda(single_target_raw(16, 16), qsar::desk_scale_params(16), opt);
    const std::vector<std::string> expected{"encode",         "range_qft",      "range_reference",
                                            "range_iqft",     "azimuth_qft",    "rcmc_range_qft",
                                            "u_rcmc",         "rcmc_range_iqft", "azimuth_filter",
                                            "azimuth_iqft"};
    EXPECT_EQ(stages, expected);
}

TEST(RunQrda, TransformsCancelWhenFiltersAreFlat) {
    // Replace every filter gate of the QRDA circuit with zero phases: the
    // remaining QFT/IQFT pairs must cancel.
    qsar::PipelineOptions opt;
    opt.phase_only_range_reference = true;
    const qsar::Circuit full = qsar::build_qrda_circuit(qsar::desk_scale_params(16), {16, 16}, opt);
    qsar::Circuit flat(full.n_qubits());
    for (const qsar::GateOp& op : full.ops()) {
        if (const auto* d = std::get_if<qsar::gate::Diagonal>(&op)) {
            flat.add(qsar::gate::Diagonal{std::vector<double>(d->phases.size(), 0.0)});
        } else {
            flat.add(op);
        }
    }
    EXPECT_EQ(full.census().diagonal, 3u);
    oracle::Rand rng(29);
    const auto input = rng.unit(256);
    qsar::StateVector s = qsar::StateVector::from_amplitudes(input);
    qsar::run_circuit(s, flat);
    EXPECT_LT(oracle::max_abs_diff(s.amplitudes(), input), 1e-10);
}

TEST(RunQrda, CircuitReproducesPipeline) {
    const SarParams p = qsar::desk_scale_params(8);
    qsar::PipelineOptions opt;
    opt.phase_only_range_reference = true;
    const ComplexMatrix raw = single_target_raw(8, 8);
    qsar::EncodedState enc = qsar::encode(raw);
    qsar::run_circuit(enc.state, qsar::build_qrda_circuit(p, {8, 8}, opt));
    EXPECT_LT(oracle::max_abs_diff(qsar::decode(enc).data(), qsar::run_qrda(raw, p, opt).data()), 1e-12);
}

// ---- comparison ------------------------------------------------------------

TEST(Compare, SelfIsZero) {
    const ComplexMatrix m = random_in(Domain::TimeTime, 8, 8, 30);
    const qsar::ComparisonReport r = qsar::compare(m, m);
    EXPECT_EQ(r.max_abs_phase_diff, 0.0);
    EXPECT_EQ(r.mean_abs_phase_diff, 0.0);
    EXPECT_EQ(r.max_abs_magnitude_rel_diff, 0.0);
    EXPECT_EQ(r.zero_magnitude_cells, 0u);
}

TEST(Compare, GlobalPhaseDetected) {
    const ComplexMatrix m = random_in(Domain::TimeTime, 8, 8, 31);
    ComplexMatrix rotated = m;
    const double phi = 0.6;
    for (cplx& z : rotated.data()) z *= std::polar(1.0, phi);
    const qsar::ComparisonReport r = qsar::compare(rotated, m);
    for (double d : r.phase_diff_matrix.values) EXPECT_NEAR(d, phi, 1e-14);
    EXPECT_NEAR(r.max_abs_phase_diff, phi, 1e-14);
    EXPECT_NEAR(r.mean_abs_phase_diff, phi, 1e-14);
}

TEST(Compare, ZeroCellsReportedSeparately) {
    ComplexMatrix a(2, 2);
    ComplexMatrix b(2, 2);
    a(0, 0) = 1.0;
    b(0, 0) = cplx(0.0, 1.0);
    const qsar::ComparisonReport r = qsar::compare(a, b);
    EXPECT_EQ(r.zero_magnitude_cells, 3u);
    EXPECT_EQ(r.phase_diff_matrix(1, 1), 0.0);
    EXPECT_NEAR(r.phase_diff_matrix(0, 0), -std::numbers::pi / 2.0, 1e-15);
}

TEST(Compare, ShapeMismatch) {
    EXPECT_THROW(qsar::compare(ComplexMatrix(2, 2), ComplexMatrix(2, 4)), qsar::ShapeError);
}

TEST(WrapPhase, HalfOpenInterval) {
    EXPECT_DOUBLE_EQ(qsar::wrap_phase(std::numbers::pi), std::numbers::pi);
    EXPECT_DOUBLE_EQ(qsar::wrap_phase(-std::numbers::pi), std::numbers::pi);
    EXPECT_NEAR(qsar::wrap_phase(3.0 * std::numbers::pi / 2.0), -std::numbers::pi / 2.0, 1e-15);
    EXPECT_EQ(qsar::wrap_phase(0.25), 0.25);
}

}  // namespace
