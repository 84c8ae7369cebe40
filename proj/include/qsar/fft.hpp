#pragma once

#include "qsar/complex_matrix.hpp"

#include <span>

namespace qsar::fft {

// Classical counterpart of the QFT. Same convention as qsar/qft.hpp:
// forward uses exp(+2 pi i x k / N), both directions scale by 1/sqrt(N),
// so a forward/inverse pair is exactly unitary. Backed by FFTW.

enum class Direction { Forward, Inverse };

/// In-place transform of one contiguous line. Length must be a power of two.
void transform(std::span<cplx> line, Direction dir);

/// Transforms every azimuth line (column) along the range axis.
/// Does not touch the domain tag; the rda stages own tag transitions.
void along_range(ComplexMatrix& m, Direction dir);

/// Transforms every range line (row) along the azimuth axis.
void along_azimuth(ComplexMatrix& m, Direction dir);

/// Frequency of bin k of an n-point transform sampled at `rate`, in FFT
/// order: DC, positive frequencies, then negative ones (bin n/2 is -rate/2).
double bin_frequency(std::size_t k, std::size_t n, double rate);

}  // namespace qsar::fft
