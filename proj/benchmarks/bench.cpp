#include <benchmark/benchmark.h>

#include <random>

#include "spectra/fourier.hpp"
#include "spectra/smoothing.hpp"
#include "spectra/sn.hpp"
#include "spectra/sparse_model.hpp"

namespace {

using namespace spectra;

std::vector<Complex> noise(std::size_t len) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  std::vector<Complex> v(len);
  for (auto& z : v) z = {normal(rng), normal(rng)};
  return v;
}

Dataset random_data(int n, int size) {
  std::mt19937_64 rng(11);
  std::vector<BitString> s;
  for (int i = 0; i < size; ++i) {
    BitString b(n);
    for (int j = 0; j < n; ++j) b.set(j, rng() & 1u);
    s.push_back(b);
  }
  return Dataset(n, std::move(s));
}

void BM_Fwht(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseFunction f(GroupSpec::boolean(n), noise(std::size_t{1} << n));
  for (auto _ : state) benchmark::DoNotOptimize(fourier(f));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Fwht)->DenseRange(8, 20, 4);

void BM_CyclicFft(benchmark::State& state) {
  const auto g = GroupSpec::cyclic(static_cast<int>(state.range(0)), 3);
  const DenseFunction f(g, noise(g.order()));
  for (auto _ : state) benchmark::DoNotOptimize(fourier(f));
}
BENCHMARK(BM_CyclicFft)->Arg(8)->Arg(7)->Arg(16)->Arg(32);

void BM_Smooth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto data = random_data(n, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(smooth(data, OrderDecay{0.1}));
}
BENCHMARK(BM_Smooth)->Arg(10)->Arg(16);

void BM_SparseModel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto data = random_data(n, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(sparse_model(data, OrderDecay{0.1}, 2));
}
BENCHMARK(BM_SparseModel)->Arg(64)->Arg(256);

void BM_KdeSample(benchmark::State& state) {
  const auto data = random_data(32, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(kde_sample(data, 0.1, 3, 10000));
}
BENCHMARK(BM_KdeSample);

void BM_SnFourier(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto kernel = diffusion_kernel(n, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(sn_fourier(kernel, SnGuard{true}));
}
BENCHMARK(BM_SnFourier)->DenseRange(4, 7);

}  // namespace

BENCHMARK_MAIN();
