#include "qsar/kernels.hpp"

#include <cmath>
#include <utility>

namespace qsar::kernels::serial {

namespace {

// Index of the pair partner with `bit` cleared, for the i-th pair.
inline std::size_t insert_zero_bit(std::size_t i, unsigned bit) {
    const std::size_t low = i & ((std::size_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

}  // namespace

void hadamard(std::span<cplx> amps, unsigned target) {
    const double s = 1.0 / std::sqrt(2.0);
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t pairs = amps.size() / 2;
    for (std::size_t i = 0; i < pairs; ++i) {
        const std::size_t i0 = insert_zero_bit(i, target);
        const std::size_t i1 = i0 | stride;
        const cplx a = amps[i0];
        const cplx b = amps[i1];
        amps[i0] = (a + b) * s;
        amps[i1] = (a - b) * s;
    }
}

void phase(std::span<cplx> amps, unsigned target, double theta) {
    const cplx factor = std::polar(1.0, theta);
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            amps[i] *= factor;
        }
    }
}

void controlled_phase(std::span<cplx> amps, unsigned control, unsigned target, double theta) {
    const cplx factor = std::polar(1.0, theta);
    const std::size_t mask = (std::size_t{1} << control) | (std::size_t{1} << target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) {
            amps[i] *= factor;
        }
    }
}

void swap(std::span<cplx> amps, unsigned a, unsigned b) {
    const std::size_t ma = std::size_t{1} << a;
    const std::size_t mb = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        // visit each (bit a = 1, bit b = 0) index once and exchange with its mirror
        if ((i & ma) && !(i & mb)) {
            std::swap(amps[i], amps[(i & ~ma) | mb]);
        }
    }
}

void diagonal(std::span<cplx> amps, std::span<const double> phases) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= std::polar(1.0, phases[i]);
    }
}

double norm_squared(std::span<const cplx> amps) {
    double sum = 0.0;
    for (const cplx& z : amps) {
        sum += std::norm(z);
    }
    return sum;
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

}  // namespace qsar::kernels::serial
