#include "qsar/complex_matrix.hpp"

#include "qsar/errors.hpp"
#include "qsar/kernels.hpp"

#include <bit>
#include <string>

namespace qsar {

std::string_view to_string(Domain d) {
    switch (d) {
        case Domain::TimeTime: return "time-time";
        case Domain::RangeFreqTime: return "rangefreq-time";
        case Domain::TimeDopplerFreq: return "time-dopplerfreq";
        case Domain::RangeFreqDopplerFreq: return "rangefreq-dopplerfreq";
    }
    return "unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t n_range, std::size_t n_azimuth, Domain domain)
    : n_range_(n_range), n_azimuth_(n_azimuth), domain_(domain), data_(n_range * n_azimuth, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t n_range, std::size_t n_azimuth, std::vector<cplx> data, Domain domain)
    : n_range_(n_range), n_azimuth_(n_azimuth), domain_(domain), data_(std::move(data)) {
    if (data_.size() != n_range_ * n_azimuth_) {
        throw ShapeError("matrix data has " + std::to_string(data_.size()) + " samples, expected " +
                         std::to_string(n_range_) + "x" + std::to_string(n_azimuth_));
    }
}

const cplx& ComplexMatrix::at(std::size_t k, std::size_t a) const {
    if (k >= n_range_ || a >= n_azimuth_) {
        throw IndexError("cell (" + std::to_string(k) + ", " + std::to_string(a) + ") outside " +
                         std::to_string(n_range_) + "x" + std::to_string(n_azimuth_) + " matrix");
    }
    return (*this)(k, a);
}

ComplexMatrix ComplexMatrix::retagged(Domain d) const& {
    ComplexMatrix out = *this;
    out.domain_ = d;
    return out;
}

ComplexMatrix ComplexMatrix::retagged(Domain d) && {
    domain_ = d;
    return std::move(*this);
}

bool ComplexMatrix::dims_are_powers_of_two() const noexcept {
    return std::has_single_bit(n_range_) && std::has_single_bit(n_azimuth_);
}

double ComplexMatrix::energy() const { return kernels::omp::norm_squared(data_); }

}  // namespace qsar
