#include "qsar/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace qsar::kernels::omp {

namespace {

inline std::size_t insert_zero_bit(std::size_t i, unsigned bit) {
    const std::size_t low = i & ((std::size_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

inline bool go_parallel(std::size_t n) { return n >= kParallelThreshold; }

}  // namespace

void hadamard(std::span<cplx> amps, unsigned target) {
    const double s = 1.0 / std::sqrt(2.0);
    const std::size_t stride = std::size_t{1} << target;
    const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
    cplx* data = amps.data();

#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))
    for (std::int64_t i = 0; i < pairs; ++i) {
        const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(i), target);
        const std::size_t i1 = i0 | stride;
        const cplx a = data[i0];
        const cplx b = data[i1];
        data[i0] = (a + b) * s;
        data[i1] = (a - b) * s;
    }
}

void phase(std::span<cplx> amps, unsigned target, double theta) {
    const cplx factor = std::polar(1.0, theta);
    const std::size_t stride = std::size_t{1} << target;
    const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
    cplx* data = amps.data();

#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))
    for (std::int64_t i = 0; i < pairs; ++i) {
        data[insert_zero_bit(static_cast<std::size_t>(i), target) | stride] *= factor;
    }
}

void controlled_phase(std::span<cplx> amps, unsigned control, unsigned target, double theta) {
    const cplx factor = std::polar(1.0, theta);
    const unsigned lo = control < target ? control : target;
    const unsigned hi = control < target ? target : control;
    const std::size_t mask = (std::size_t{1} << lo) | (std::size_t{1} << hi);
    const auto quads = static_cast<std::int64_t>(amps.size() / 4);
    cplx* data = amps.data();

#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))
    for (std::int64_t i = 0; i < quads; ++i) {
        const std::size_t base = insert_zero_bit(insert_zero_bit(static_cast<std::size_t>(i), lo), hi);
        data[base | mask] *= factor;
    }
}

void swap(std::span<cplx> amps, unsigned a, unsigned b) {
    const unsigned lo = a < b ? a : b;
    const unsigned hi = a < b ? b : a;
    const std::size_t mlo = std::size_t{1} << lo;
    const std::size_t mhi = std::size_t{1} << hi;
    const auto quads = static_cast<std::int64_t>(amps.size() / 4);
    cplx* data = amps.data();

#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))
    for (std::int64_t i = 0; i < quads; ++i) {
        const std::size_t base = insert_zero_bit(insert_zero_bit(static_cast<std::size_t>(i), lo), hi);
        std::swap(data[base | mlo], data[base | mhi]);
    }
}

void diagonal(std::span<cplx> amps, std::span<const double> phases) {
    const auto n = static_cast<std::int64_t>(amps.size());
    cplx* data = amps.data();
    const double* ph = phases.data();

#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))
    for (std::int64_t i = 0; i < n; ++i) {
        data[i] *= std::polar(1.0, ph[i]);
    }
}

double norm_squared(std::span<const cplx> amps) {
    const std::size_t chunks = (amps.size() + kReductionChunk - 1) / kReductionChunk;
    std::vector<double> partial(chunks, 0.0);

#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
        const std::size_t end = std::min(begin + kReductionChunk, amps.size());
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            sum += std::norm(amps[i]);
        }
        partial[static_cast<std::size_t>(c)] = sum;
    }

    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
    const std::size_t chunks = (a.size() + kReductionChunk - 1) / kReductionChunk;
    std::vector<cplx> partial(chunks);

#pragma omp parallel for schedule(static) if (go_parallel(a.size()))
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
        const std::size_t end = std::min(begin + kReductionChunk, a.size());
        cplx sum{0.0, 0.0};
        for (std::size_t i = begin; i < end; ++i) {
            sum += std::conj(a[i]) * b[i];
        }
        partial[static_cast<std::size_t>(c)] = sum;
    }

    cplx total{0.0, 0.0};
    for (const cplx& p : partial) {
        total += p;
    }
    return total;
}

}  // namespace qsar::kernels::omp
