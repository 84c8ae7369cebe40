#pragma once

#include "qsar/circuit.hpp"
#include "qsar/state_vector.hpp"

#include <span>
#include <vector>

namespace qsar {

// Transform convention shared by the QFT and the classical FFT (qsar/fft.hpp):
//
//     out[k] = 1/sqrt(N) * sum_x in[x] * exp(+2 pi i x k / N)
//
// positive exponent, unitary scaling, output in natural frequency order.

struct QftSpec {
    unsigned n_qubits = 1;
    bool inverse = false;
    bool include_bit_reversal_swaps = true;
};

struct QftGateCount {
    std::size_t hadamard = 0;
    std::size_t controlled_phase = 0;
    std::size_t swap = 0;

    friend bool operator==(const QftGateCount&, const QftGateCount&) = default;
};

/// Exact QFT circuit: each qubit from most to least significant gets a
/// Hadamard followed by controlled rotations 2 pi / 2^k conditioned on the
/// lower-significance qubits, then floor(n/2) swaps for bit reversal. The
/// inverse is the reversed list with negated angles.
Circuit build_qft(const QftSpec& spec);

/// Closed-form gate counts (n, n(n-1)/2, floor(n/2)); swaps are 0 when disabled.
QftGateCount gate_count(const QftSpec& spec);

/// QFT over the listed qubits of an n_qubits register, as a circuit on the
/// full register. `qubits[j]` is bit j of the transformed sub-index.
Circuit build_subset_qft(unsigned n_qubits, std::span<const unsigned> qubits, bool inverse);

/// Length-2^m transform over the listed qubits, applied independently to
/// every slice obtained by fixing the other qubits. `qubits[j]` is bit j of
/// the sub-index (qubits[0] least significant). Throws ArgumentError on duplicates.
void apply_qft_to_subset(StateVector& state, std::span<const unsigned> qubits, bool inverse);

/// O(N^2) reference DFT in the convention above. Throws ShapeError unless
/// the length is a power of two.
std::vector<cplx> dft_oracle(std::span<const cplx> input);

}  // namespace qsar
