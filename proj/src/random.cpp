#include "qsar/random.hpp"

#include <cmath>

namespace qsar {

std::vector<cplx> SeededRng::complex_vector(std::size_t n) {
    std::vector<cplx> v(n);
    for (cplx& z : v) {
        z = complex();
    }
    return v;
}

std::vector<cplx> SeededRng::unit_vector(std::size_t n) {
    std::vector<cplx> v = complex_vector(n);
    double sum = 0.0;
    for (const cplx& z : v) {
        sum += std::norm(z);
    }
    const double scale = 1.0 / std::sqrt(sum);
    for (cplx& z : v) {
        z *= scale;
    }
    return v;
}

ComplexMatrix random_matrix(std::size_t n_range, std::size_t n_azimuth, std::uint64_t seed, Domain domain) {
    SeededRng rng(seed);
    return ComplexMatrix(n_range, n_azimuth, rng.complex_vector(n_range * n_azimuth), domain);
}

}  // namespace qsar
