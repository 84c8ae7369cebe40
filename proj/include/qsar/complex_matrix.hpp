#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qsar {

using cplx = std::complex<double>;

/// Which axes of a SAR matrix are currently in the frequency domain.
enum class Domain {
    TimeTime,              // s(tau, eta): raw or focused image
    RangeFreqTime,         // (f_tau, eta)
    TimeDopplerFreq,       // (tau, f_eta): range-Doppler domain
    RangeFreqDopplerFreq,  // (f_tau, f_eta): 2-D frequency domain
};

std::string_view to_string(Domain d);

/// N_r x N_a complex samples, row-major: row k is range bin k, column a is
/// azimuth line a. Element (k, a) lives at k * N_a + a, which is also its
/// amplitude index after encoding.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t n_range, std::size_t n_azimuth, Domain domain = Domain::TimeTime);
    /// Throws ShapeError when data.size() != n_range * n_azimuth.
    ComplexMatrix(std::size_t n_range, std::size_t n_azimuth, std::vector<cplx> data,
                  Domain domain = Domain::TimeTime);

    std::size_t n_range() const noexcept { return n_range_; }
    std::size_t n_azimuth() const noexcept { return n_azimuth_; }
    std::size_t size() const noexcept { return data_.size(); }
    Domain domain() const noexcept { return domain_; }

    std::span<cplx> data() noexcept { return data_; }
    std::span<const cplx> data() const noexcept { return data_; }

    cplx& operator()(std::size_t k, std::size_t a) { return data_[k * n_azimuth_ + a]; }
    const cplx& operator()(std::size_t k, std::size_t a) const { return data_[k * n_azimuth_ + a]; }

    /// Bounds-checked element access; throws IndexError.
    const cplx& at(std::size_t k, std::size_t a) const;

    /// Same samples with a different domain tag. Used when ingesting data
    /// that was produced outside the pipeline; the pipeline stages retag
    /// through their own transforms.
    ComplexMatrix retagged(Domain d) const&;
    ComplexMatrix retagged(Domain d) &&;

    bool dims_are_powers_of_two() const noexcept;

    /// Sum of |x|^2 over all samples.
    double energy() const;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t n_range_ = 0;
    std::size_t n_azimuth_ = 0;
    Domain domain_ = Domain::TimeTime;
    std::vector<cplx> data_;
};

}  // namespace qsar
