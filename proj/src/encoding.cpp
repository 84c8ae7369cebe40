#include "qsar/encoding.hpp"

#include "qsar/errors.hpp"
#include "qsar/kernels.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

namespace qsar {

std::size_t flat_index(GridShape shape, std::size_t k, std::size_t a) {
    if (k >= shape.n_range || a >= shape.n_azimuth) {
        throw IndexError("grid cell (" + std::to_string(k) + ", " + std::to_string(a) + ") outside " +
                         std::to_string(shape.n_range) + "x" + std::to_string(shape.n_azimuth));
    }
    return k * shape.n_azimuth + a;
}

std::pair<std::size_t, std::size_t> grid_index(GridShape shape, std::size_t i) {
    if (i >= shape.n_range * shape.n_azimuth) {
        throw IndexError("amplitude index " + std::to_string(i) + " outside grid");
    }
    return {i / shape.n_azimuth, i % shape.n_azimuth};
}

unsigned azimuth_qubits(GridShape shape) { return static_cast<unsigned>(std::countr_zero(shape.n_azimuth)); }

unsigned range_qubits(GridShape shape) { return static_cast<unsigned>(std::countr_zero(shape.n_range)); }

EncodedState encode(const ComplexMatrix& matrix) {
    if (!matrix.dims_are_powers_of_two()) {
        throw ShapeError("cannot encode " + std::to_string(matrix.n_range()) + "x" +
                         std::to_string(matrix.n_azimuth()) + " matrix: dimensions must be powers of two");
    }
    const double norm = std::sqrt(matrix.energy());
    if (norm == 0.0) {
        throw DegenerateInputError("cannot amplitude-encode an all-zero matrix");
    }
    std::vector<cplx> amps(matrix.data().begin(), matrix.data().end());
    for (cplx& z : amps) {
        z /= norm;
    }
    return EncodedState{StateVector::from_amplitudes(std::move(amps)), norm,
                        GridShape{matrix.n_range(), matrix.n_azimuth()}, matrix.domain()};
}

ComplexMatrix decode(const EncodedState& enc) {
    const auto amps = enc.state.amplitudes();
    std::vector<cplx> data(amps.begin(), amps.end());
    for (cplx& z : data) {
        z *= enc.norm_factor;
    }
    return ComplexMatrix(enc.shape.n_range, enc.shape.n_azimuth, std::move(data), enc.domain);
}

}  // namespace qsar
