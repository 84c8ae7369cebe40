#pragma once

#include "qsar/circuit.hpp"
#include "qsar/complex_matrix.hpp"
#include "qsar/encoding.hpp"
#include "qsar/sar_signal.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace qsar {

/// Per-stage probe. `norm` is the state-vector norm for quantum stages and
/// the Frobenius norm of the matrix for classical stages.
using StageHook = std::function<void(std::string_view stage, Domain domain, double norm)>;

struct PipelineOptions {
    /// Use G / |G| instead of the matched filter G. Required by run_qrda.
    bool phase_only_range_reference = false;
    /// Skip RCMC entirely (for demonstrating its effect on focus).
    bool rcmc_enabled = true;
    StageHook hook;
};

// ---- classical stages ------------------------------------------------------

/// IFFT_tau[FFT_tau[s] . G] per azimuth line. Requires and keeps time-time.
ComplexMatrix range_compress(const ComplexMatrix& raw, const SarParams& params, bool phase_only_reference = false);

/// time-time -> time-dopplerfreq.
ComplexMatrix azimuth_fft(const ComplexMatrix& src);
/// time-dopplerfreq -> time-time.
ComplexMatrix azimuth_ifft(const ComplexMatrix& src);
/// time-X -> rangefreq-X.
ComplexMatrix range_fft(const ComplexMatrix& src);
/// rangefreq-X -> time-X.
ComplexMatrix range_ifft(const ComplexMatrix& src);

/// Range FFT, multiply by exp(i Theta) from rcmc_filter, range IFFT. Requires time-dopplerfreq.
ComplexMatrix apply_rcmc_classical(const ComplexMatrix& src, const SarParams& params);

/// Multiply each Doppler spectrum by H(f_eta), then azimuth IFFT. time-dopplerfreq -> time-time.
ComplexMatrix azimuth_compress(const ComplexMatrix& src, const SarParams& params);

/// Range compression, azimuth FFT, RCMC, azimuth compression.
ComplexMatrix run_classical(const ComplexMatrix& raw, const SarParams& params, const PipelineOptions& options = {});

// ---- quantum RCMC ----------------------------------------------------------

/// Phases for the RCMC diagonal unitary.
///
/// BlockPerRangeLine carries one angle per range line, repeated over that
/// line's N_a amplitudes (the block-diagonal e^{i Theta_k} (x) I form).
/// FullGrid carries one angle per (range frequency, Doppler) cell, which is
/// what the classical filter actually applies.
struct RcmcGateSpec {
    enum class Mode { BlockPerRangeLine, FullGrid };

    Mode mode = Mode::FullGrid;
    GridShape shape;
    std::vector<double> phases;

    static RcmcGateSpec block(GridShape shape, std::vector<double> per_range_line);
    static RcmcGateSpec full_grid(const RealMatrix& theta);
};

/// Diagonal gate with phases[k * N_a + a] = Theta_k (block) or Theta[k][a] (full grid).
/// Throws ShapeError if the phase count does not match the mode and shape.
gate::Diagonal build_u_rcmc(const RcmcGateSpec& spec);

/// Angles of a unit-modulus filter laid out over the register. `along_range`
/// puts filter[k] on every amplitude of range line k; otherwise filter[a]
/// goes on every amplitude of azimuth column a. Throws NonUnitaryFilterError
/// if any |filter| differs from 1 by more than 1e-12.
gate::Diagonal diagonal_from_filter(std::span<const cplx> filter, GridShape shape, bool along_range);

/// Encode -> diagonal exp(i Theta) -> decode, on a matrix already in the 2-D frequency domain.
ComplexMatrix rcmc_isolated_quantum(const ComplexMatrix& freq, const RealMatrix& theta);
/// Elementwise exp(i Theta) multiplication; the classical reference for rcmc_isolated_quantum.
ComplexMatrix rcmc_isolated_classical(const ComplexMatrix& freq, const RealMatrix& theta);

/// Classical range FFT, encode, full-grid U_RCMC, decode, classical range IFFT.
/// Requires time-dopplerfreq and power-of-two dimensions.
ComplexMatrix apply_rcmc_quantum(const ComplexMatrix& src, const SarParams& params, const StageHook& hook = {});

/// run_classical with the RCMC stage executed as a quantum diagonal gate.
ComplexMatrix run_hybrid(const ComplexMatrix& raw, const SarParams& params, const PipelineOptions& options = {});

/// Whole chain on one encoded state: QFT/IQFT over the range or azimuth
/// qubits for every transform and diagonal gates for all three filters.
/// Throws NonUnitaryFilterError unless options.phase_only_range_reference is set.
ComplexMatrix run_qrda(const ComplexMatrix& raw, const SarParams& params, const PipelineOptions& options = {});

/// The run_qrda gate sequence as a circuit on log2(N_r N_a) qubits.
Circuit build_qrda_circuit(const SarParams& params, GridShape shape, const PipelineOptions& options = {});

// ---- comparison ------------------------------------------------------------

struct CompareOptions {
    /// Cells whose magnitude in both inputs is at most this fraction of the
    /// larger input's peak magnitude count as zero-magnitude: their phase is
    /// reported as 0 and they are excluded from the metrics.
    double zero_magnitude_floor = 0.0;
};

struct ComparisonReport {
    double max_abs_phase_diff = 0.0;          // rad
    double mean_abs_phase_diff = 0.0;         // rad, over non-zero cells
    double max_abs_magnitude_rel_diff = 0.0;  // | |a| - |b| | / |b|, over non-zero cells
    std::size_t zero_magnitude_cells = 0;
    RealMatrix phase_diff_matrix;             // wrap(arg a - arg b) in (-pi, pi]
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double x);

/// Throws ShapeError when the shapes differ.
ComparisonReport compare(const ComplexMatrix& a, const ComplexMatrix& b, const CompareOptions& options = {});

struct FocusMetrics {
    std::size_t peak_range_bin = 0;
    std::size_t peak_azimuth_bin = 0;
    double peak_magnitude = 0.0;
    double median_magnitude = 0.0;
    /// |peak|^2 / total energy.
    double peak_energy_fraction = 0.0;
};

FocusMetrics focus_metrics(const ComplexMatrix& image);

}  // namespace qsar
