#pragma once

#include "qsar/state_vector.hpp"

#include <span>
#include <variant>
#include <vector>

namespace qsar {

namespace gate {

struct Hadamard {
    unsigned target;
};

/// diag(1, e^{i theta}) on one qubit.
struct Phase {
    unsigned target;
    double theta;
};

/// Phase e^{i theta} on the |11> component of (control, target). Symmetric in its two qubits.
struct ControlledPhase {
    unsigned control;
    unsigned target;
    double theta;
};

struct Swap {
    unsigned a;
    unsigned b;
};

/// Full-register diagonal unitary; stores the angles only, entries are e^{i phases[i]}.
struct Diagonal {
    std::vector<double> phases;
};

}  // namespace gate

using GateOp = std::variant<gate::Hadamard, gate::Phase, gate::ControlledPhase, gate::Swap, gate::Diagonal>;

/// The gate that undoes `op`: H and SWAP are self-inverse, phase-type gates negate their angles.
GateOp inverse(const GateOp& op);

/// Applies a single gate in place.
void apply(StateVector& state, const GateOp& op);

struct GateCensus {
    std::size_t hadamard = 0;
    std::size_t phase = 0;
    std::size_t controlled_phase = 0;
    std::size_t swap = 0;
    std::size_t diagonal = 0;

    friend bool operator==(const GateCensus&, const GateCensus&) = default;
};

/// Ordered gate list for a fixed register size. Every gate is validated
/// against the register when it is appended.
class Circuit {
public:
    explicit Circuit(unsigned n_qubits);

    unsigned n_qubits() const noexcept { return n_qubits_; }
    std::span<const GateOp> ops() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }
    bool empty() const noexcept { return ops_.empty(); }

    Circuit& add(GateOp op);
    Circuit& append(const Circuit& other);

    /// Reversed gate list with each gate inverted.
    Circuit inverse() const;

    /// Relabels qubits: gate qubit q becomes mapping[q] in a register of
    /// `target_qubits` qubits. Diagonal gates cannot be remapped.
    Circuit remapped(std::span<const unsigned> mapping, unsigned target_qubits) const;

    GateCensus census() const;

private:
    unsigned n_qubits_;
    std::vector<GateOp> ops_;
};

/// Applies the circuit's gates in list order. Throws ShapeError when the
/// register size differs from the circuit's.
void run_circuit(StateVector& state, const Circuit& circuit);

}  // namespace qsar
