#pragma once

#include "qsar/complex_matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qsar {

inline constexpr double kSpeedOfLight = 299792458.0;

/// Radar and platform constants, SI units throughout.
struct SarParams {
    double wavelength = 0.0;         // m
    double chirp_rate = 0.0;         // Hz/s
    double pulse_duration = 0.0;     // s
    double range_sample_rate = 0.0;  // Hz
    double prf = 0.0;                // Hz, azimuth sample rate
    double velocity = 0.0;           // m/s
    double reference_range = 0.0;    // m
    double c = kSpeedOfLight;        // m/s

    /// Throws ParamsError unless every field is finite and strictly positive.
    /// The Doppler band is checked separately by the filters that need it.
    void validate() const;

    /// Slant-range spacing of one range sample, c / (2 f_s).
    double range_bin_spacing() const { return c / (2.0 * range_sample_rate); }

    /// Samples covered by one transmitted pulse: #{n >= 0 : n / f_s < T_p}.
    std::size_t pulse_samples() const;
};

/// C-band spaceborne geometry scaled down to a desk-sized grid.
///
/// lambda = 0.055 m, V = 7100 m/s, R0 = 850 km, PRF = 400 Hz and
/// f_s = 3 GHz (5 cm range bins). A 64-line aperture then migrates a target
/// by about 3.8 range bins. The pulse spans n_range / 4 samples with a
/// bandwidth of 0.8 f_s, so the echo of a target at R0 plus its migration
/// stays inside the window for any n_range >= 8.
SarParams desk_scale_params(std::size_t n_range = 64);

struct PointTarget {
    double range_offset = 0.0;   // m, relative to R0 at closest approach
    double azimuth_time = 0.0;   // s, time of closest approach
    cplx reflectivity{1.0, 0.0};
};

// Sampling geometry of a raw N_r x N_a window:
//   range sample n  <->  echo start delay 2 (R0 + (n - N_r/4) dR) / c
//   azimuth line j  <->  slow time (j - N_a/2) / PRF
// so a target with zero offset and zero azimuth time focuses at
// (N_r/4, N_a/2).

/// Fractional range sample at which a target's echo starts when its slant range is `slant_range`.
double echo_start_sample(const SarParams& params, double slant_range, std::size_t n_range);

/// Slow time of azimuth line j.
double azimuth_time_of_line(const SarParams& params, std::size_t j, std::size_t n_azimuth);

/// Nearest (range bin, azimuth bin) where a focused target should appear.
std::pair<std::size_t, std::size_t> expected_target_bins(const SarParams& params, const PointTarget& target,
                                                         std::size_t n_range, std::size_t n_azimuth);

/// Point-target raw echoes: for each target a linear-FM pulse of duration
/// T_p delayed by 2R(eta)/c, with R(eta) = sqrt((R0 + offset)^2 + V^2 (eta - eta_c)^2)
/// and azimuth phase exp(-4 pi i R(eta) / lambda). Stop-and-go, rectangular
/// envelope, no antenna pattern. Throws BoundsError naming the target when
/// any part of an echo falls outside the range window.
ComplexMatrix simulate_raw(const SarParams& params, std::span<const PointTarget> targets, std::size_t n_range,
                           std::size_t n_azimuth);

/// Chirp replica exp(i pi K_r (t - T_p/2)^2), t = n / f_s, zero-padded to n_range.
std::vector<cplx> chirp_replica(const SarParams& params, std::size_t n_range);

/// Range matched filter G(f_tau): conjugate of the forward transform of the
/// zero-padded replica. Throws FilterLengthError if the pulse is longer than the window.
std::vector<cplx> range_reference(const SarParams& params, std::size_t n_range);

/// G / |G| (entries with |G| = 0 become 1). Unit modulus, so it can run as a diagonal gate.
std::vector<cplx> phase_only_range_reference(const SarParams& params, std::size_t n_range);

/// D(f_eta, V) = sqrt(1 - (lambda f_eta / 2V)^2), in (0, 1].
/// Throws EvanescentDopplerError when (lambda f_eta / 2V)^2 >= 1.
double doppler_factor(double f_eta, const SarParams& params);

/// Doppler frequency of azimuth bin a, FFT order.
double doppler_frequency(const SarParams& params, std::size_t a, std::size_t n_azimuth);

/// Physical range frequency of range bin k, FFT order. Under the +i forward
/// convention a component exp(+2 pi i f t) lands in bin -f, so this is the
/// negated bin frequency.
double range_frequency(const SarParams& params, std::size_t k, std::size_t n_range);

/// Real-valued n_rows x n_cols grid, row-major.
struct RealMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<double> values;

    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols) : n_rows(rows), n_cols(cols), values(rows * cols, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return values[r * n_cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return values[r * n_cols + c]; }
};

/// RCMC phase grid Theta[k][a] = (4 pi f_r(k) / c) * R0 * (1 / D(f_eta(a)) - 1),
/// k over range frequency, a over Doppler frequency. The realized filter is exp(i Theta).
RealMatrix rcmc_filter(const SarParams& params, std::size_t n_range, std::size_t n_azimuth);

/// Azimuth matched filter H(f_eta) = exp(+4 pi i R0 D(f_eta) / lambda); |H| = 1.
std::vector<cplx> azimuth_filter(const SarParams& params, std::size_t n_azimuth);

}  // namespace qsar
