// Serial reference kernels against their OpenMP counterparts.

#include "qsar/kernels.hpp"
#include "qsar/qft.hpp"
#include "qsar/random.hpp"

#include <benchmark/benchmark.h>

namespace {

namespace serial = qsar::kernels::serial;
namespace omp = qsar::kernels::omp;
using qsar::kernels::cplx;

std::vector<cplx> state(unsigned n) { return qsar::SeededRng(n).unit_vector(std::size_t{1} << n); }

template <auto Kernel>
void BM_Hadamard(benchmark::State& st) {
    const auto n = static_cast<unsigned>(st.range(0));
    auto amps = state(n);
    for (auto _ : st) {
        Kernel(amps, n / 2);
        benchmark::ClobberMemory();
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_ControlledPhase(benchmark::State& st) {
    const auto n = static_cast<unsigned>(st.range(0));
    auto amps = state(n);
    for (auto _ : st) {
        Kernel(amps, 0, n - 1, 0.3);
        benchmark::ClobberMemory();
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_Diagonal(benchmark::State& st) {
    const auto n = static_cast<unsigned>(st.range(0));
    auto amps = state(n);
    std::vector<double> phases(amps.size());
    for (std::size_t i = 0; i < phases.size(); ++i) phases[i] = 1e-3 * static_cast<double>(i % 977);
    for (auto _ : st) {
        Kernel(amps, phases);
        benchmark::ClobberMemory();
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_NormSquared(benchmark::State& st) {
    const auto amps = state(static_cast<unsigned>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(Kernel(amps));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(amps.size()));
}

void BM_FullQft(benchmark::State& st) {
    const auto n = static_cast<unsigned>(st.range(0));
    const qsar::Circuit qft = qsar::build_qft({n, false, true});
    qsar::StateVector s = qsar::StateVector::from_amplitudes(state(n));
    for (auto _ : st) qsar::run_circuit(s, qft);
}

void sizes(benchmark::internal::Benchmark* b) {
    for (int n : {12, 16, 20, 22}) b->Arg(n);
}

BENCHMARK(BM_Hadamard<serial::hadamard>)->Name("hadamard/serial")->Apply(sizes);
BENCHMARK(BM_Hadamard<omp::hadamard>)->Name("hadamard/omp")->Apply(sizes)->UseRealTime();
BENCHMARK(BM_ControlledPhase<serial::controlled_phase>)->Name("controlled_phase/serial")->Apply(sizes);
BENCHMARK(BM_ControlledPhase<omp::controlled_phase>)->Name("controlled_phase/omp")->Apply(sizes)->UseRealTime();
BENCHMARK(BM_Diagonal<serial::diagonal>)->Name("diagonal/serial")->Apply(sizes);
BENCHMARK(BM_Diagonal<omp::diagonal>)->Name("diagonal/omp")->Apply(sizes)->UseRealTime();
BENCHMARK(BM_NormSquared<serial::norm_squared>)->Name("norm_squared/serial")->Apply(sizes);
BENCHMARK(BM_NormSquared<omp::norm_squared>)->Name("norm_squared/omp")->Apply(sizes)->UseRealTime();
BENCHMARK(BM_FullQft)->Name("qft_circuit")->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
