#include "qsar/fft.hpp"

#include "qsar/errors.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace qsar::fft {

namespace {

// FFTW planning is not thread-safe; execution with fftw_execute_dft is.
// Plans are made once per (length, sign) with FFTW_ESTIMATE, which is
// deterministic, and FFTW_UNALIGNED so any buffer can be passed.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard lock(mutex_);
        const auto key = std::make_pair(n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        std::vector<cplx> scratch(n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr) {
            throw Error("FFTW failed to create a plan of length " + std::to_string(n));
        }
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

// FFTW_BACKWARD is the +i exponent, which is our forward direction.
int fftw_sign(Direction dir) { return dir == Direction::Forward ? FFTW_BACKWARD : FFTW_FORWARD; }

void check_length(std::size_t n) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw ShapeError("transform length " + std::to_string(n) + " is not a power of two");
    }
}

void run(fftw_plan plan, std::span<cplx> line) {
    auto* buf = reinterpret_cast<fftw_complex*>(line.data());
    fftw_execute_dft(plan, buf, buf);
    const double scale = 1.0 / std::sqrt(static_cast<double>(line.size()));
    for (cplx& z : line) {
        z *= scale;
    }
}

}  // namespace

void transform(std::span<cplx> line, Direction dir) {
    check_length(line.size());
    run(cache().get(line.size(), fftw_sign(dir)), line);
}

void along_range(ComplexMatrix& m, Direction dir) {
    const std::size_t nr = m.n_range();
    const std::size_t na = m.n_azimuth();
    check_length(nr);
    const fftw_plan plan = cache().get(nr, fftw_sign(dir));
    cplx* data = m.data().data();

#pragma omp parallel
    {
        std::vector<cplx> column(nr);
#pragma omp for schedule(static)
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(na); ++a) {
            for (std::size_t k = 0; k < nr; ++k) {
                column[k] = data[k * na + static_cast<std::size_t>(a)];
            }
            run(plan, column);
            for (std::size_t k = 0; k < nr; ++k) {
                data[k * na + static_cast<std::size_t>(a)] = column[k];
            }
        }
    }
}

void along_azimuth(ComplexMatrix& m, Direction dir) {
    const std::size_t nr = m.n_range();
    const std::size_t na = m.n_azimuth();
    check_length(na);
    const fftw_plan plan = cache().get(na, fftw_sign(dir));
    cplx* data = m.data().data();

#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(nr); ++k) {
        run(plan, std::span<cplx>(data + static_cast<std::size_t>(k) * na, na));
    }
}

double bin_frequency(std::size_t k, std::size_t n, double rate) {
    const auto ki = static_cast<double>(k);
    const auto ni = static_cast<double>(n);
    return (k < (n + 1) / 2 ? ki : ki - ni) * rate / ni;
}

}  // namespace qsar::fft
