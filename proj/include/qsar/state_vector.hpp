#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qsar {

using cplx = std::complex<double>;

/// Dense n-qubit register holding all 2^n amplitudes.
///
/// Qubit 0 is the least-significant bit of the amplitude index. Gates are
/// applied in place by strided updates through the OpenMP kernels; no gate
/// matrix is ever materialized. There is no measurement: amplitudes are read
/// back directly, as from an ideal noise-free simulator.
class StateVector {
public:
    // 24 qubits = 16M amplitudes = 256 MiB.
    static constexpr unsigned kMaxQubits = 24;

    /// |0...0> on `n_qubits` qubits. Throws CapacityError outside [1, kMaxQubits].
    static StateVector zero(unsigned n_qubits);

    /// Takes ownership of explicit amplitudes. The length must be 2^n with
    /// 1 <= n <= kMaxQubits and the L2 norm must be 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<cplx> amps);

    unsigned n_qubits() const noexcept { return n_qubits_; }
    std::size_t size() const noexcept { return amps_.size(); }

    std::span<const cplx> amplitudes() const noexcept { return amps_; }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }

    StateVector& apply_hadamard(unsigned target);
    StateVector& apply_phase(unsigned target, double theta);
    StateVector& apply_controlled_phase(unsigned control, unsigned target, double theta);
    StateVector& apply_swap(unsigned a, unsigned b);
    /// Multiplies amps[i] by exp(i * phases[i]). Throws ShapeError on a length mismatch.
    StateVector& apply_diagonal(std::span<const double> phases);

    double norm() const;

    /// Moves the amplitudes out; the register is left empty.
    std::vector<cplx> release() && { return std::move(amps_); }

private:
    StateVector(unsigned n_qubits, std::vector<cplx> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    void check_qubit(unsigned q) const;

    unsigned n_qubits_;
    std::vector<cplx> amps_;
};

/// Sum of conj(a_i) * b_i. Throws ShapeError when the registers differ in size.
cplx inner_product(const StateVector& a, const StateVector& b);

}  // namespace qsar
