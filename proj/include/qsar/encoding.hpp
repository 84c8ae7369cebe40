#pragma once

#include "qsar/complex_matrix.hpp"
#include "qsar/state_vector.hpp"

#include <cstddef>
#include <utility>

namespace qsar {

struct GridShape {
    std::size_t n_range = 0;
    std::size_t n_azimuth = 0;
};

/// Amplitude-encoded SAR matrix. The state carries the normalized samples;
/// the scale and the shape needed to undo the encoding travel alongside.
struct EncodedState {
    StateVector state;
    double norm_factor = 0.0;
    GridShape shape;
    Domain domain = Domain::TimeTime;
};

/// Amplitude index of cell (k, a): k * N_a + a. Range bins occupy
/// contiguous blocks of N_a amplitudes, i.e. the range index lives in the
/// high-order qubits and the azimuth index in the low-order ones.
/// Throws IndexError when (k, a) is outside the grid.
std::size_t flat_index(GridShape shape, std::size_t k, std::size_t a);

/// Inverse of flat_index: returns (k, a).
std::pair<std::size_t, std::size_t> grid_index(GridShape shape, std::size_t i);

/// Number of low-order (azimuth) and high-order (range) qubits for a grid.
unsigned azimuth_qubits(GridShape shape);
unsigned range_qubits(GridShape shape);

/// Divides the flattened matrix by its L2 norm and loads it as amplitudes.
/// Throws ShapeError unless both dimensions are powers of two and
/// DegenerateInputError for an all-zero matrix.
EncodedState encode(const ComplexMatrix& matrix);

/// matrix[k][a] = norm_factor * amps[k * N_a + a], tagged with the encoded domain.
ComplexMatrix decode(const EncodedState& enc);

}  // namespace qsar
