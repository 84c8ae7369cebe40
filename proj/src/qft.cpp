#include "qsar/qft.hpp"

#include "qsar/errors.hpp"

#include <bit>
#include <numbers>
#include <string>

namespace qsar {

Circuit build_qft(const QftSpec& spec) {
    if (spec.n_qubits < 1) {
        throw ArgumentError("QFT needs at least one qubit");
    }
    const unsigned n = spec.n_qubits;
    Circuit qft(n);
    for (unsigned t = n; t-- > 0;) {
        qft.add(gate::Hadamard{t});
        for (unsigned c = t; c-- > 0;) {
            const unsigned k = t - c + 1;
            qft.add(gate::ControlledPhase{c, t, 2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << k)});
        }
    }
    if (spec.include_bit_reversal_swaps) {
        for (unsigned i = 0; i < n / 2; ++i) {
            qft.add(gate::Swap{i, n - 1 - i});
        }
    }
    return spec.inverse ? qft.inverse() : qft;
}

QftGateCount gate_count(const QftSpec& spec) {
    const std::size_t n = spec.n_qubits;
    return {n, n * (n - 1) / 2, spec.include_bit_reversal_swaps ? n / 2 : 0};
}

Circuit build_subset_qft(unsigned n_qubits, std::span<const unsigned> qubits, bool inverse) {
    if (qubits.empty()) {
        throw ArgumentError("QFT subset is empty");
    }
    std::size_t seen = 0;
    for (unsigned q : qubits) {
        if (q >= n_qubits) {
            throw IndexError("qubit index " + std::to_string(q) + " out of range for " +
                             std::to_string(n_qubits) + "-qubit register");
        }
        if (seen & (std::size_t{1} << q)) {
            throw ArgumentError("duplicate qubit " + std::to_string(q) + " in QFT subset");
        }
        seen |= std::size_t{1} << q;
    }
    const auto m = static_cast<unsigned>(qubits.size());
    return build_qft({m, inverse, true}).remapped(qubits, n_qubits);
}

void apply_qft_to_subset(StateVector& state, std::span<const unsigned> qubits, bool inverse) {
    run_circuit(state, build_subset_qft(state.n_qubits(), qubits, inverse));
}

std::vector<cplx> dft_oracle(std::span<const cplx> input) {
    const std::size_t n = input.size();
    if (n == 0 || !std::has_single_bit(n)) {
        throw ShapeError("DFT length " + std::to_string(n) + " is not a power of two");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t x = 0; x < n; ++x) {
            // reduce x*k mod N first so the angle stays exact for large N
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((x * k) % n) / static_cast<double>(n);
            acc += input[x] * std::polar(1.0, angle);
        }
        out[k] = acc * scale;
    }
    return out;
}

}  // namespace qsar
