#include <benchmark/benchmark.h>

#include <memory>

#include "pdc/constants.hpp"
#include "pdc/dispersion.hpp"
#include "pdc/jsa.hpp"
#include "pdc/phasematch.hpp"
#include "pdc/squeezing.hpp"

namespace {

using namespace pdc;

std::shared_ptr<const CrystalModel> crystal() {
  static const auto c = std::make_shared<const CrystalModel>(load_crystal_file(PDC_BUNDLED_CRYSTAL));
  return c;
}

PdcConfig cgvm_config() {
  PdcConfig c;
  c.crystal = crystal();
  c.pump_wavelength_um = 0.775;
  c.temperature_c = 10.7245;
  c.length_m = 0.08;
  return c;
}

PumpPulse pump() {
  PumpPulse p;
  p.wavelength_um = 0.775;
  p.bandwidth_nm = 4.0;
  p.mean_power_w = 12e-3;
  p.repetition_rate_hz = 100e6;
  return p;
}

void BM_RefractiveIndex(benchmark::State& state) {
  const AxisDispersion ax(*crystal(), OpticalAxis::ordinary(), 24.5);
  double omega = constants::angular_frequency(1.55);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ax.sample(omega));
    omega += 1.0;
  }
}
BENCHMARK(BM_RefractiveIndex);

void BM_SolveCgvm(benchmark::State& state) {
  const AxisPairing pairing{OpticalAxis::extraordinary(), OpticalAxis::ordinary()};
  for (auto _ : state) benchmark::DoNotOptimize(solve_cgvm(*crystal(), pairing, 24.5, {1.0, 2.0}));
}
BENCHMARK(BM_SolveCgvm);

void BM_SolveCgvmTemperature(benchmark::State& state) {
  const AxisPairing pairing{OpticalAxis::extraordinary(), OpticalAxis::ordinary()};
  for (auto _ : state) benchmark::DoNotOptimize(solve_cgvm_temperature(*crystal(), pairing, 1.55, {-20.0, 80.0}));
}
BENCHMARK(BM_SolveCgvmTemperature)->Unit(benchmark::kMicrosecond);

void BM_ComputeJsa(benchmark::State& state) {
  const auto c = cgvm_config();
  const auto grid = default_grid(c, pump(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_jsa(c, pump(), grid));
}
BENCHMARK(BM_ComputeJsa)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_SchmidtDecompose(benchmark::State& state) {
  const auto c = cgvm_config();
  const auto jsa = compute_jsa(c, pump(), default_grid(c, pump(), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(schmidt_decompose(jsa, {.compute_modes = state.range(1) != 0}));
}
BENCHMARK(BM_SchmidtDecompose)->Args({256, 0})->Args({256, 1})->Args({512, 0})->Args({512, 1})->Unit(benchmark::kMillisecond);

void BM_SqueezingSpectrum(benchmark::State& state) {
  const auto c = cgvm_config();
  for (auto _ : state) benchmark::DoNotOptimize(squeezing_spectrum(c, pump(), {.n = 512}));
}
BENCHMARK(BM_SqueezingSpectrum)->Unit(benchmark::kMillisecond);

}  // namespace

// the packaged benchmark_main archive carries LTO bytecode from another compiler
BENCHMARK_MAIN();
