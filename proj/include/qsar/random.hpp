#pragma once

#include "qsar/complex_matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qsar {

/// Reproducible random fixtures.
///
/// std::mt19937_64 is fully specified by the standard, but the std
/// distributions are not, so values are derived from the raw 64-bit output:
/// the top 53 bits give u in [0, 1), mapped to 2u - 1 in [-1, 1). Complex
/// samples draw the real part first, then the imaginary part. Matrices are
/// filled row-major.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return 2.0 * u - 1.0;
    }

    cplx complex() {
        const double re = uniform();
        const double im = uniform();
        return {re, im};
    }

    std::vector<cplx> complex_vector(std::size_t n);
    /// Complex vector scaled to unit L2 norm.
    std::vector<cplx> unit_vector(std::size_t n);

private:
    std::mt19937_64 engine_;
};

ComplexMatrix random_matrix(std::size_t n_range, std::size_t n_azimuth, std::uint64_t seed,
                            Domain domain = Domain::TimeTime);

}  // namespace qsar
