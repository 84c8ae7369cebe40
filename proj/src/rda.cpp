#include "qsar/rda.hpp"

#include "qsar/errors.hpp"
#include "qsar/fft.hpp"
#include "qsar/qft.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>

namespace qsar {

namespace {

void require_domain(const ComplexMatrix& m, Domain expected, std::string_view stage) {
    if (m.domain() != expected) {
        throw PipelineOrderError(std::string(stage) + " expects " + std::string(to_string(expected)) +
                                 " data, got " + std::string(to_string(m.domain())));
    }
}

void report(const StageHook& hook, std::string_view stage, const ComplexMatrix& m) {
    if (hook) {
        hook(stage, m.domain(), std::sqrt(m.energy()));
    }
}

void check_gate_shape(const ComplexMatrix& m) {
    if (!m.dims_are_powers_of_two()) {
        throw ShapeError("quantum stages need power-of-two dimensions, got " + std::to_string(m.n_range()) + "x" +
                         std::to_string(m.n_azimuth()));
    }
}

std::vector<unsigned> qubit_range(unsigned first, unsigned count) {
    std::vector<unsigned> q(count);
    std::iota(q.begin(), q.end(), first);
    return q;
}

struct QuantumStage {
    std::string name;
    Domain domain_after;
    Circuit circuit;
};

std::vector<QuantumStage> qrda_stages(const SarParams& params, GridShape shape, const PipelineOptions& options) {
    if (!options.phase_only_range_reference) {
        throw NonUnitaryFilterError(
            "the matched range reference is not unit-modulus and cannot run as a diagonal unitary; "
            "enable the phase-only range reference");
    }
    const unsigned na_q = azimuth_qubits(shape);
    const unsigned nr_q = range_qubits(shape);
    const unsigned n = na_q + nr_q;
    const std::vector<unsigned> rq = qubit_range(na_q, nr_q);
    const std::vector<unsigned> aq = qubit_range(0, na_q);

    auto single = [n](GateOp op) {
        Circuit c(n);
        c.add(std::move(op));
        return c;
    };
    auto subset = [n](const std::vector<unsigned>& qubits, bool inverse) {
        // a 1-point transform along an axis of length 1 is the identity
        return qubits.empty() ? Circuit(n) : build_subset_qft(n, qubits, inverse);
    };

    std::vector<QuantumStage> stages;
    stages.push_back({"range_qft", Domain::RangeFreqTime, subset(rq, false)});
    stages.push_back({"range_reference",
                      Domain::RangeFreqTime,
                      single(diagonal_from_filter(phase_only_range_reference(params, shape.n_range), shape, true))});
    stages.push_back({"range_iqft", Domain::TimeTime, subset(rq, true)});
    stages.push_back({"azimuth_qft", Domain::TimeDopplerFreq, subset(aq, false)});
    if (options.rcmc_enabled) {
        stages.push_back({"rcmc_range_qft", Domain::RangeFreqDopplerFreq, subset(rq, false)});
        stages.push_back({"u_rcmc",
                          Domain::RangeFreqDopplerFreq,
                          single(build_u_rcmc(RcmcGateSpec::full_grid(rcmc_filter(params, shape.n_range, shape.n_azimuth))))});
        stages.push_back({"rcmc_range_iqft", Domain::TimeDopplerFreq, subset(rq, true)});
    }
    stages.push_back({"azimuth_filter",
                      Domain::TimeDopplerFreq,
                      single(diagonal_from_filter(azimuth_filter(params, shape.n_azimuth), shape, false))});
    stages.push_back({"azimuth_iqft", Domain::TimeTime, subset(aq, true)});
    return stages;
}

}  // namespace

// ---- classical stages ------------------------------------------------------

ComplexMatrix range_fft(const ComplexMatrix& src) {
    Domain next;
    switch (src.domain()) {
        case Domain::TimeTime: next = Domain::RangeFreqTime; break;
        case Domain::TimeDopplerFreq: next = Domain::RangeFreqDopplerFreq; break;
        default:
            throw PipelineOrderError("range FFT on data already in range frequency (" +
                                     std::string(to_string(src.domain())) + ")");
    }
    ComplexMatrix out = src.retagged(next);
    fft::along_range(out, fft::Direction::Forward);
    return out;
}

ComplexMatrix range_ifft(const ComplexMatrix& src) {
    Domain next;
    switch (src.domain()) {
        case Domain::RangeFreqTime: next = Domain::TimeTime; break;
        case Domain::RangeFreqDopplerFreq: next = Domain::TimeDopplerFreq; break;
        default:
            throw PipelineOrderError("range IFFT on data not in range frequency (" +
                                     std::string(to_string(src.domain())) + ")");
    }
    ComplexMatrix out = src.retagged(next);
    fft::along_range(out, fft::Direction::Inverse);
    return out;
}

ComplexMatrix azimuth_fft(const ComplexMatrix& src) {
    require_domain(src, Domain::TimeTime, "azimuth FFT");
    ComplexMatrix out = src.retagged(Domain::TimeDopplerFreq);
    fft::along_azimuth(out, fft::Direction::Forward);
    return out;
}

ComplexMatrix azimuth_ifft(const ComplexMatrix& src) {
    require_domain(src, Domain::TimeDopplerFreq, "azimuth IFFT");
    ComplexMatrix out = src.retagged(Domain::TimeTime);
    fft::along_azimuth(out, fft::Direction::Inverse);
    return out;
}

ComplexMatrix range_compress(const ComplexMatrix& raw, const SarParams& params, bool phase_only_reference) {
    require_domain(raw, Domain::TimeTime, "range compression");
    const std::vector<cplx> g = phase_only_reference ? phase_only_range_reference(params, raw.n_range())
                                                     : range_reference(params, raw.n_range());
    ComplexMatrix spec = range_fft(raw);
    const std::size_t na = spec.n_azimuth();
    for (std::size_t k = 0; k < spec.n_range(); ++k) {
        for (std::size_t a = 0; a < na; ++a) {
            spec(k, a) *= g[k];
        }
    }
    return range_ifft(spec);
}

ComplexMatrix apply_rcmc_classical(const ComplexMatrix& src, const SarParams& params) {
    require_domain(src, Domain::TimeDopplerFreq, "RCMC");
    const RealMatrix theta = rcmc_filter(params, src.n_range(), src.n_azimuth());
    ComplexMatrix spec = range_fft(src);
    cplx* data = spec.data().data();
    const auto total = static_cast<std::int64_t>(spec.size());

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
        data[i] *= std::polar(1.0, theta.values[static_cast<std::size_t>(i)]);
    }
    return range_ifft(spec);
}

ComplexMatrix azimuth_compress(const ComplexMatrix& src, const SarParams& params) {
    require_domain(src, Domain::TimeDopplerFreq, "azimuth compression");
    const std::vector<cplx> h = azimuth_filter(params, src.n_azimuth());
    ComplexMatrix out = src;
    for (std::size_t k = 0; k < out.n_range(); ++k) {
        for (std::size_t a = 0; a < out.n_azimuth(); ++a) {
            out(k, a) *= h[a];
        }
    }
    return azimuth_ifft(out);
}

ComplexMatrix run_classical(const ComplexMatrix& raw, const SarParams& params, const PipelineOptions& options) {
    require_domain(raw, Domain::TimeTime, "classical RDA");
    ComplexMatrix m = range_compress(raw, params, options.phase_only_range_reference);
    report(options.hook, "range_compress", m);
    m = azimuth_fft(m);
    report(options.hook, "azimuth_fft", m);
    if (options.rcmc_enabled) {
        m = apply_rcmc_classical(m, params);
        report(options.hook, "rcmc", m);
    }
    m = azimuth_compress(m, params);
    report(options.hook, "azimuth_compress", m);
    return m;
}

// ---- quantum RCMC ----------------------------------------------------------

RcmcGateSpec RcmcGateSpec::block(GridShape shape, std::vector<double> per_range_line) {
    return RcmcGateSpec{Mode::BlockPerRangeLine, shape, std::move(per_range_line)};
}

RcmcGateSpec RcmcGateSpec::full_grid(const RealMatrix& theta) {
    return RcmcGateSpec{Mode::FullGrid, GridShape{theta.n_rows, theta.n_cols}, theta.values};
}

gate::Diagonal build_u_rcmc(const RcmcGateSpec& spec) {
    const GridShape s = spec.shape;
    const std::size_t expected = spec.mode == RcmcGateSpec::Mode::BlockPerRangeLine ? s.n_range : s.n_range * s.n_azimuth;
    if (spec.phases.size() != expected) {
        throw ShapeError("RCMC gate spec has " + std::to_string(spec.phases.size()) + " phases, expected " +
                         std::to_string(expected));
    }
    if (spec.mode == RcmcGateSpec::Mode::FullGrid) {
        return gate::Diagonal{spec.phases};
    }
    gate::Diagonal d{std::vector<double>(s.n_range * s.n_azimuth)};
    for (std::size_t k = 0; k < s.n_range; ++k) {
        for (std::size_t a = 0; a < s.n_azimuth; ++a) {
            d.phases[flat_index(s, k, a)] = spec.phases[k];
        }
    }
    return d;
}

gate::Diagonal diagonal_from_filter(std::span<const cplx> filter, GridShape shape, bool along_range) {
    const std::size_t expected = along_range ? shape.n_range : shape.n_azimuth;
    if (filter.size() != expected) {
        throw ShapeError("filter has " + std::to_string(filter.size()) + " taps, expected " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < filter.size(); ++i) {
        if (std::abs(std::abs(filter[i]) - 1.0) > 1e-12) {
            throw NonUnitaryFilterError("filter tap " + std::to_string(i) + " has modulus " +
                                        std::to_string(std::abs(filter[i])) + "; only unit-modulus filters are unitary");
        }
    }
    gate::Diagonal d{std::vector<double>(shape.n_range * shape.n_azimuth)};
    for (std::size_t k = 0; k < shape.n_range; ++k) {
        for (std::size_t a = 0; a < shape.n_azimuth; ++a) {
            d.phases[flat_index(shape, k, a)] = std::arg(filter[along_range ? k : a]);
        }
    }
    return d;
}

ComplexMatrix rcmc_isolated_quantum(const ComplexMatrix& freq, const RealMatrix& theta) {
    if (theta.n_rows != freq.n_range() || theta.n_cols != freq.n_azimuth()) {
        throw ShapeError("RCMC phase grid does not match the data shape");
    }
    EncodedState enc = encode(freq);
    enc.state.apply_diagonal(build_u_rcmc(RcmcGateSpec::full_grid(theta)).phases);
    return decode(enc);
}

ComplexMatrix rcmc_isolated_classical(const ComplexMatrix& freq, const RealMatrix& theta) {
    if (theta.n_rows != freq.n_range() || theta.n_cols != freq.n_azimuth()) {
        throw ShapeError("RCMC phase grid does not match the data shape");
    }
    ComplexMatrix out = freq;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.data()[i] *= std::polar(1.0, theta.values[i]);
    }
    return out;
}

ComplexMatrix apply_rcmc_quantum(const ComplexMatrix& src, const SarParams& params, const StageHook& hook) {
    require_domain(src, Domain::TimeDopplerFreq, "quantum RCMC");
    check_gate_shape(src);
    const RealMatrix theta = rcmc_filter(params, src.n_range(), src.n_azimuth());
    EncodedState enc = encode(range_fft(src));
    if (hook) {
        hook("encode", enc.domain, enc.state.norm());
    }
    enc.state.apply_diagonal(build_u_rcmc(RcmcGateSpec::full_grid(theta)).phases);
    if (hook) {
        hook("u_rcmc", enc.domain, enc.state.norm());
    }
    return range_ifft(decode(enc));
}

ComplexMatrix run_hybrid(const ComplexMatrix& raw, const SarParams& params, const PipelineOptions& options) {
    require_domain(raw, Domain::TimeTime, "hybrid RDA");
    check_gate_shape(raw);
    ComplexMatrix m = range_compress(raw, params, options.phase_only_range_reference);
    report(options.hook, "range_compress", m);
    m = azimuth_fft(m);
    report(options.hook, "azimuth_fft", m);
    if (options.rcmc_enabled) {
        m = apply_rcmc_quantum(m, params, options.hook);
        report(options.hook, "rcmc", m);
    }
    m = azimuth_compress(m, params);
    report(options.hook, "azimuth_compress", m);
    return m;
}

Circuit build_qrda_circuit(const SarParams& params, GridShape shape, const PipelineOptions& options) {
    Circuit full(azimuth_qubits(shape) + range_qubits(shape));
    for (const QuantumStage& stage : qrda_stages(params, shape, options)) {
        full.append(stage.circuit);
    }
    return full;
}

ComplexMatrix run_qrda(const ComplexMatrix& raw, const SarParams& params, const PipelineOptions& options) {
    require_domain(raw, Domain::TimeTime, "quantum RDA");
    check_gate_shape(raw);
    const GridShape shape{raw.n_range(), raw.n_azimuth()};
    // build (and validate the filters) before encoding, so a bad request fails without touching data
    const std::vector<QuantumStage> stages = qrda_stages(params, shape, options);

    EncodedState enc = encode(raw);
    if (options.hook) {
        options.hook("encode", enc.domain, enc.state.norm());
    }
    for (const QuantumStage& stage : stages) {
        run_circuit(enc.state, stage.circuit);
        enc.domain = stage.domain_after;
        if (options.hook) {
            options.hook(stage.name, enc.domain, enc.state.norm());
        }
    }
    return decode(enc);
}

// ---- comparison ------------------------------------------------------------

double wrap_phase(double x) {
    double w = std::remainder(x, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) {
        w += 2.0 * std::numbers::pi;
    }
    return w;
}

ComparisonReport compare(const ComplexMatrix& a, const ComplexMatrix& b, const CompareOptions& options) {
    if (a.n_range() != b.n_range() || a.n_azimuth() != b.n_azimuth()) {
        throw ShapeError("cannot compare " + std::to_string(a.n_range()) + "x" + std::to_string(a.n_azimuth()) +
                         " with " + std::to_string(b.n_range()) + "x" + std::to_string(b.n_azimuth()));
    }
    double peak = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        peak = std::max({peak, std::abs(a.data()[i]), std::abs(b.data()[i])});
    }
    const double floor = options.zero_magnitude_floor * peak;

    ComparisonReport r;
    r.phase_diff_matrix = RealMatrix(a.n_range(), a.n_azimuth());
    double sum = 0.0;
    std::size_t counted = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const cplx za = a.data()[i];
        const cplx zb = b.data()[i];
        const double ma = std::abs(za);
        const double mb = std::abs(zb);
        const double larger = std::max(ma, mb);
        if (larger > floor) {
            r.max_abs_magnitude_rel_diff = std::max(r.max_abs_magnitude_rel_diff, std::abs(ma - mb) / larger);
        }
        if (ma <= floor || mb <= floor) {
            ++r.zero_magnitude_cells;
            continue;
        }
        const double d = wrap_phase(std::arg(za) - std::arg(zb));
        r.phase_diff_matrix.values[i] = d;
        r.max_abs_phase_diff = std::max(r.max_abs_phase_diff, std::abs(d));
        sum += std::abs(d);
        ++counted;
    }
    r.mean_abs_phase_diff = counted > 0 ? sum / static_cast<double>(counted) : 0.0;
    return r;
}

FocusMetrics focus_metrics(const ComplexMatrix& image) {
    FocusMetrics f;
    if (image.size() == 0) {
        return f;
    }
    std::vector<double> mags(image.size());
    double energy = 0.0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        mags[i] = std::abs(image.data()[i]);
        energy += mags[i] * mags[i];
        if (mags[i] > f.peak_magnitude) {
            f.peak_magnitude = mags[i];
            f.peak_range_bin = i / image.n_azimuth();
            f.peak_azimuth_bin = i % image.n_azimuth();
        }
    }
    f.peak_energy_fraction = energy > 0.0 ? f.peak_magnitude * f.peak_magnitude / energy : 0.0;
    const std::size_t mid = mags.size() / 2;
    std::nth_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(mid), mags.end());
    f.median_magnitude = mags[mid];
    if (mags.size() % 2 == 0) {
        const double lower = *std::max_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(mid));
        f.median_magnitude = 0.5 * (f.median_magnitude + lower);
    }
    return f;
}

}  // namespace qsar
