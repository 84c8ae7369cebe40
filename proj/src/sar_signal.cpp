#include "qsar/sar_signal.hpp"

#include "qsar/errors.hpp"
#include "qsar/fft.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <string>

namespace qsar {

namespace {

constexpr double kPi = std::numbers::pi;

// 4 pi R0 / lambda reduced mod 2 pi. The raw generator and the azimuth
// filter both split their large phases as this constant plus a small
// remainder so neither loses precision on an 850 km range.
double reference_phase(const SarParams& p) { return std::fmod(4.0 * kPi * p.reference_range / p.wavelength, 2.0 * kPi); }

// D - 1 without cancellation: -x^2 / (1 + sqrt(1 - x^2)).
double doppler_factor_minus_one(double f_eta, const SarParams& p) {
    const double x = p.wavelength * f_eta / (2.0 * p.velocity);
    return -(x * x) / (1.0 + doppler_factor(f_eta, p));
}

void check_power_of_two(std::size_t n, const char* what) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw ShapeError(std::string(what) + " size " + std::to_string(n) + " is not a power of two");
    }
}

}  // namespace

void SarParams::validate() const {
    const std::pair<const char*, double> fields[] = {
        {"wavelength", wavelength},       {"chirp_rate", chirp_rate}, {"pulse_duration", pulse_duration},
        {"range_sample_rate", range_sample_rate}, {"prf", prf},     {"velocity", velocity},
        {"reference_range", reference_range},     {"c", c},
    };
    for (const auto& [name, value] : fields) {
        if (!std::isfinite(value) || value <= 0.0) {
            throw ParamsError(std::string("parameter ") + name + " must be finite and > 0 (got " +
                              std::to_string(value) + ")");
        }
    }
}

std::size_t SarParams::pulse_samples() const {
    std::size_t n = 0;
    while (static_cast<double>(n) / range_sample_rate < pulse_duration) {
        ++n;
    }
    return n;
}

SarParams desk_scale_params(std::size_t n_range) {
    SarParams p;
    p.wavelength = 0.055;
    p.velocity = 7100.0;
    p.reference_range = 850e3;
    p.prf = 400.0;
    p.range_sample_rate = 3e9;
    const std::size_t pulse = n_range / 4 > 0 ? n_range / 4 : 1;
    p.pulse_duration = static_cast<double>(pulse) / p.range_sample_rate;
    p.chirp_rate = 0.8 * p.range_sample_rate / p.pulse_duration;
    return p;
}

double echo_start_sample(const SarParams& params, double slant_range, std::size_t n_range) {
    return static_cast<double>(n_range / 4) + (slant_range - params.reference_range) / params.range_bin_spacing();
}

double azimuth_time_of_line(const SarParams& params, std::size_t j, std::size_t n_azimuth) {
    return (static_cast<double>(j) - static_cast<double>(n_azimuth / 2)) / params.prf;
}

std::pair<std::size_t, std::size_t> expected_target_bins(const SarParams& params, const PointTarget& target,
                                                         std::size_t n_range, std::size_t n_azimuth) {
    const double k = static_cast<double>(n_range / 4) + target.range_offset / params.range_bin_spacing();
    const double a = static_cast<double>(n_azimuth / 2) + target.azimuth_time * params.prf;
    const auto wrap = [](double x, std::size_t n) {
        const auto r = static_cast<std::int64_t>(std::llround(x)) % static_cast<std::int64_t>(n);
        return static_cast<std::size_t>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
    };
    return {wrap(k, n_range), wrap(a, n_azimuth)};
}

ComplexMatrix simulate_raw(const SarParams& params, std::span<const PointTarget> targets, std::size_t n_range,
                           std::size_t n_azimuth) {
    params.validate();
    check_power_of_two(n_range, "range");
    check_power_of_two(n_azimuth, "azimuth");

    const double fs = params.range_sample_rate;
    const double pulse_len = params.pulse_duration * fs;
    const double phi0 = reference_phase(params);
    const double r0 = params.reference_range;
    const double v2 = params.velocity * params.velocity;

    // Slant range minus R0 for every (target, line), computed without cancellation.
    std::vector<double> excess(targets.size() * n_azimuth);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const PointTarget& tgt = targets[t];
        if (!std::isfinite(tgt.range_offset) || !std::isfinite(tgt.azimuth_time)) {
            throw ArgumentError("target " + std::to_string(t) + " has non-finite geometry");
        }
        const double rc = r0 + tgt.range_offset;
        for (std::size_t j = 0; j < n_azimuth; ++j) {
            const double dt = azimuth_time_of_line(params, j, n_azimuth) - tgt.azimuth_time;
            const double range = std::sqrt(rc * rc + v2 * dt * dt);
            const double dr = (2.0 * r0 * tgt.range_offset + tgt.range_offset * tgt.range_offset + v2 * dt * dt) /
                              (range + r0);
            const double start = echo_start_sample(params, r0 + dr, n_range);
            if (start < 0.0 || start + pulse_len > static_cast<double>(n_range)) {
                std::ostringstream msg;
                msg << "target " << t << " (range_offset " << tgt.range_offset << " m, azimuth_time "
                    << tgt.azimuth_time << " s) leaves the range window at azimuth line " << j << ": echo spans samples ["
                    << start << ", " << start + pulse_len << ") of " << n_range;
                throw BoundsError(msg.str());
            }
            excess[t * n_azimuth + j] = dr;
        }
    }

    ComplexMatrix raw(n_range, n_azimuth, Domain::TimeTime);
    cplx* data = raw.data().data();

#pragma omp parallel for schedule(static)
    for (std::int64_t js = 0; js < static_cast<std::int64_t>(n_azimuth); ++js) {
        const auto j = static_cast<std::size_t>(js);
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const double dr = excess[t * n_azimuth + j];
            const double start = echo_start_sample(params, r0 + dr, n_range);
            const cplx azimuth_phase =
                targets[t].reflectivity * std::polar(1.0, -(phi0 + 4.0 * kPi * dr / params.wavelength));
            for (std::size_t n = 0; n < n_range; ++n) {
                const double u = (static_cast<double>(n) - start) / fs;
                if (u < 0.0 || u >= params.pulse_duration) {
                    continue;
                }
                const double centered = u - params.pulse_duration / 2.0;
                data[n * n_azimuth + j] += azimuth_phase * std::polar(1.0, kPi * params.chirp_rate * centered * centered);
            }
        }
    }
    return raw;
}

std::vector<cplx> chirp_replica(const SarParams& params, std::size_t n_range) {
    params.validate();
    const std::size_t len = params.pulse_samples();
    if (len > n_range) {
        throw FilterLengthError("pulse spans " + std::to_string(len) + " samples but the range window has only " +
                                std::to_string(n_range));
    }
    std::vector<cplx> replica(n_range, cplx{0.0, 0.0});
    for (std::size_t n = 0; n < len; ++n) {
        const double centered = static_cast<double>(n) / params.range_sample_rate - params.pulse_duration / 2.0;
        replica[n] = std::polar(1.0, kPi * params.chirp_rate * centered * centered);
    }
    return replica;
}

std::vector<cplx> range_reference(const SarParams& params, std::size_t n_range) {
    check_power_of_two(n_range, "range");
    std::vector<cplx> g = chirp_replica(params, n_range);
    fft::transform(g, fft::Direction::Forward);
    for (cplx& z : g) {
        z = std::conj(z);
    }
    return g;
}

std::vector<cplx> phase_only_range_reference(const SarParams& params, std::size_t n_range) {
    std::vector<cplx> g = range_reference(params, n_range);
    for (cplx& z : g) {
        const double mag = std::abs(z);
        z = mag > 0.0 ? z / mag : cplx{1.0, 0.0};
    }
    return g;
}

double doppler_factor(double f_eta, const SarParams& params) {
    const double x = params.wavelength * f_eta / (2.0 * params.velocity);
    const double arg = 1.0 - x * x;
    if (!(arg > 0.0)) {
        throw EvanescentDopplerError("Doppler frequency " + std::to_string(f_eta) +
                                     " Hz is outside the real range of D (lambda f / 2V = " + std::to_string(x) + ")");
    }
    return std::sqrt(arg);
}

double doppler_frequency(const SarParams& params, std::size_t a, std::size_t n_azimuth) {
    return fft::bin_frequency(a, n_azimuth, params.prf);
}

double range_frequency(const SarParams& params, std::size_t k, std::size_t n_range) {
    return -fft::bin_frequency(k, n_range, params.range_sample_rate);
}

RealMatrix rcmc_filter(const SarParams& params, std::size_t n_range, std::size_t n_azimuth) {
    params.validate();
    // Theta is rank one: a range-frequency factor times a Doppler factor.
    std::vector<double> migration(n_azimuth);
    for (std::size_t a = 0; a < n_azimuth; ++a) {
        const double f_eta = doppler_frequency(params, a, n_azimuth);
        const double dm1 = doppler_factor_minus_one(f_eta, params);
        // R0 (1/D - 1) = -R0 (D - 1) / D
        migration[a] = -params.reference_range * dm1 / (1.0 + dm1);
    }
    RealMatrix theta(n_range, n_azimuth);
    for (std::size_t k = 0; k < n_range; ++k) {
        const double scale = 4.0 * kPi * range_frequency(params, k, n_range) / params.c;
        for (std::size_t a = 0; a < n_azimuth; ++a) {
            theta(k, a) = scale * migration[a];
        }
    }
    return theta;
}

std::vector<cplx> azimuth_filter(const SarParams& params, std::size_t n_azimuth) {
    params.validate();
    const double phi0 = reference_phase(params);
    std::vector<cplx> h(n_azimuth);
    for (std::size_t a = 0; a < n_azimuth; ++a) {
        const double f_eta = doppler_frequency(params, a, n_azimuth);
        const double dm1 = doppler_factor_minus_one(f_eta, params);
        h[a] = std::polar(1.0, phi0 + 4.0 * kPi * params.reference_range * dm1 / params.wavelength);
    }
    return h;
}

}  // namespace qsar
