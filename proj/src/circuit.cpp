#include "qsar/circuit.hpp"

#include "qsar/errors.hpp"

#include <cmath>
#include <string>
#include <type_traits>

namespace qsar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_index(unsigned q, unsigned n) {
    if (q >= n) {
        throw IndexError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n) +
                         "-qubit circuit");
    }
}

void check_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw ArgumentError("phase angle must be finite");
    }
}

void validate(const GateOp& op, unsigned n) {
    std::visit(overloaded{
                   [n](const gate::Hadamard& g) { check_index(g.target, n); },
                   [n](const gate::Phase& g) {
                       check_index(g.target, n);
                       check_angle(g.theta);
                   },
                   [n](const gate::ControlledPhase& g) {
                       check_index(g.control, n);
                       check_index(g.target, n);
                       if (g.control == g.target) {
                           throw ArgumentError("controlled phase needs distinct control and target");
                       }
                       check_angle(g.theta);
                   },
                   [n](const gate::Swap& g) {
                       check_index(g.a, n);
                       check_index(g.b, n);
                       if (g.a == g.b) {
                           throw ArgumentError("swap needs two distinct qubits");
                       }
                   },
                   [n](const gate::Diagonal& g) {
                       if (g.phases.size() != (std::size_t{1} << n)) {
                           throw ShapeError("diagonal gate length does not match register");
                       }
                       for (double p : g.phases) {
                           check_angle(p);
                       }
                   },
               },
               op);
}

}  // namespace

GateOp inverse(const GateOp& op) {
    return std::visit(overloaded{
                          [](const gate::Hadamard& g) -> GateOp { return g; },
                          [](const gate::Phase& g) -> GateOp { return gate::Phase{g.target, -g.theta}; },
                          [](const gate::ControlledPhase& g) -> GateOp {
                              return gate::ControlledPhase{g.control, g.target, -g.theta};
                          },
                          [](const gate::Swap& g) -> GateOp { return g; },
                          [](const gate::Diagonal& g) -> GateOp {
                              gate::Diagonal inv{g.phases};
                              for (double& p : inv.phases) {
                                  p = -p;
                              }
                              return inv;
                          },
                      },
                      op);
}

void apply(StateVector& state, const GateOp& op) {
    std::visit(overloaded{
                   [&](const gate::Hadamard& g) { state.apply_hadamard(g.target); },
                   [&](const gate::Phase& g) { state.apply_phase(g.target, g.theta); },
                   [&](const gate::ControlledPhase& g) {
                       state.apply_controlled_phase(g.control, g.target, g.theta);
                   },
                   [&](const gate::Swap& g) { state.apply_swap(g.a, g.b); },
                   [&](const gate::Diagonal& g) { state.apply_diagonal(g.phases); },
               },
               op);
}

Circuit::Circuit(unsigned n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > StateVector::kMaxQubits) {
        throw CapacityError("circuit size " + std::to_string(n_qubits) + " outside [1, " +
                            std::to_string(StateVector::kMaxQubits) + "] qubits");
    }
}

Circuit& Circuit::add(GateOp op) {
    validate(op, n_qubits_);
    ops_.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_) {
        throw ShapeError("cannot append circuits of different register sizes");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv(n_qubits_);
    inv.ops_.reserve(ops_.size());
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        inv.ops_.push_back(qsar::inverse(*it));
    }
    return inv;
}

Circuit Circuit::remapped(std::span<const unsigned> mapping, unsigned target_qubits) const {
    if (mapping.size() != n_qubits_) {
        throw ShapeError("qubit mapping must have one entry per circuit qubit");
    }
    auto map = [&](unsigned q) { return mapping[q]; };
    Circuit out(target_qubits);
    for (const GateOp& op : ops_) {
        out.add(std::visit(overloaded{
                               [&](const gate::Hadamard& g) -> GateOp { return gate::Hadamard{map(g.target)}; },
                               [&](const gate::Phase& g) -> GateOp {
                                   return gate::Phase{map(g.target), g.theta};
                               },
                               [&](const gate::ControlledPhase& g) -> GateOp {
                                   return gate::ControlledPhase{map(g.control), map(g.target), g.theta};
                               },
                               [&](const gate::Swap& g) -> GateOp { return gate::Swap{map(g.a), map(g.b)}; },
                               [](const gate::Diagonal&) -> GateOp {
                                   throw ArgumentError("diagonal gates act on the whole register and cannot be remapped");
                               },
                           },
                           op));
    }
    return out;
}

GateCensus Circuit::census() const {
    GateCensus c;
    for (const GateOp& op : ops_) {
        std::visit(overloaded{
                       [&](const gate::Hadamard&) { ++c.hadamard; },
                       [&](const gate::Phase&) { ++c.phase; },
                       [&](const gate::ControlledPhase&) { ++c.controlled_phase; },
                       [&](const gate::Swap&) { ++c.swap; },
                       [&](const gate::Diagonal&) { ++c.diagonal; },
                   },
                   op);
    }
    return c;
}

void run_circuit(StateVector& state, const Circuit& circuit) {
    if (state.n_qubits() != circuit.n_qubits()) {
        throw ShapeError("circuit on " + std::to_string(circuit.n_qubits()) + " qubits applied to " +
                         std::to_string(state.n_qubits()) + "-qubit register");
    }
    for (const GateOp& op : circuit.ops()) {
        apply(state, op);
    }
}

}  // namespace qsar
