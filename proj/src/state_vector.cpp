#include "qsar/state_vector.hpp"

#include "qsar/errors.hpp"
#include "qsar/kernels.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qsar {

namespace {

void check_finite(double theta) {
    if (!std::isfinite(theta)) {
        throw ArgumentError("phase angle must be finite");
    }
}

}  // namespace

StateVector StateVector::zero(unsigned n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw CapacityError("register size " + std::to_string(n_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "] qubits");
    }
    std::vector<cplx> amps(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps[0] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw ShapeError("amplitude count " + std::to_string(amps.size()) +
                         " is not a power of two >= 2");
    }
    const auto n = static_cast<unsigned>(std::countr_zero(amps.size()));
    if (n > kMaxQubits) {
        throw CapacityError("register size " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxQubits) + " qubits");
    }
    const double norm = std::sqrt(kernels::omp::norm_squared(amps));
    if (std::abs(norm - 1.0) > 1e-10) {
        throw ArgumentError("amplitudes are not unit norm (norm = " + std::to_string(norm) + ")");
    }
    return StateVector(n, std::move(amps));
}

void StateVector::check_qubit(unsigned q) const {
    if (q >= n_qubits_) {
        throw IndexError("qubit index " + std::to_string(q) + " out of range for " +
                         std::to_string(n_qubits_) + "-qubit register");
    }
}

StateVector& StateVector::apply_hadamard(unsigned target) {
    check_qubit(target);
    kernels::omp::hadamard(amps_, target);
    return *this;
}

StateVector& StateVector::apply_phase(unsigned target, double theta) {
    check_qubit(target);
    check_finite(theta);
    kernels::omp::phase(amps_, target, theta);
    return *this;
}

StateVector& StateVector::apply_controlled_phase(unsigned control, unsigned target, double theta) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ArgumentError("controlled phase needs distinct control and target");
    }
    check_finite(theta);
    kernels::omp::controlled_phase(amps_, control, target, theta);
    return *this;
}

StateVector& StateVector::apply_swap(unsigned a, unsigned b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw ArgumentError("swap needs two distinct qubits");
    }
    kernels::omp::swap(amps_, a, b);
    return *this;
}

StateVector& StateVector::apply_diagonal(std::span<const double> phases) {
    if (phases.size() != amps_.size()) {
        throw ShapeError("diagonal has " + std::to_string(phases.size()) + " phases, register has " +
                         std::to_string(amps_.size()) + " amplitudes");
    }
    for (double p : phases) {
        check_finite(p);
    }
    kernels::omp::diagonal(amps_, phases);
    return *this;
}

double StateVector::norm() const { return std::sqrt(kernels::omp::norm_squared(amps_)); }

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) {
        throw ShapeError("inner product of registers with different sizes");
    }
    return kernels::omp::inner_product(a.amplitudes(), b.amplitudes());
}

}  // namespace qsar
