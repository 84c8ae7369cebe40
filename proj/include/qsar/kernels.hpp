#pragma once

// Amplitude-update kernels behind every gate application.
//
// Two implementations with identical signatures:
//   kernels::serial  plain loops, kept as the reference the tests check against
//   kernels::omp     OpenMP-parallel loops over disjoint amplitude blocks
//
// Both assume validated arguments (indices in range, spans of matching
// length). Qubit 0 is the least-significant bit of the amplitude index.
// The gate kernels touch each amplitude independently, so the OpenMP versions
// are bitwise identical to the serial ones. The reductions in the OpenMP
// namespace sum fixed-size chunks and then combine the chunk sums in index
// order, so their result does not depend on the thread count.

#include <complex>
#include <cstddef>
#include <span>

namespace qsar::kernels {

using cplx = std::complex<double>;

namespace serial {

void hadamard(std::span<cplx> amps, unsigned target);
void phase(std::span<cplx> amps, unsigned target, double theta);
void controlled_phase(std::span<cplx> amps, unsigned control, unsigned target, double theta);
void swap(std::span<cplx> amps, unsigned a, unsigned b);
void diagonal(std::span<cplx> amps, std::span<const double> phases);
double norm_squared(std::span<const cplx> amps);
cplx inner_product(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace serial

namespace omp {

// Below this many amplitudes the kernels run on the calling thread only.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;
// Fixed reduction chunk; must not depend on the thread count.
inline constexpr std::size_t kReductionChunk = std::size_t{1} << 10;

void hadamard(std::span<cplx> amps, unsigned target);
void phase(std::span<cplx> amps, unsigned target, double theta);
void controlled_phase(std::span<cplx> amps, unsigned control, unsigned target, double theta);
void swap(std::span<cplx> amps, unsigned a, unsigned b);
void diagonal(std::span<cplx> amps, std::span<const double> phases);
double norm_squared(std::span<const cplx> amps);
cplx inner_product(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace omp

}  // namespace qsar::kernels
