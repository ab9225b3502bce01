// Microbenchmarks for the hot paths: the permanent engine that backs every
// moment, the sphere geometry behind the phase identities, the truncated
// number-state oracle, and the end-to-end sweep loop. Run with
// --benchmark_filter=... to narrow; sizes are chosen so a full pass stays
// under a minute.

#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hbtsim/correlator.hpp"
#include "hbtsim/entanglement.hpp"
#include "hbtsim/fock_oracle.hpp"
#include "hbtsim/multislit.hpp"
#include "hbtsim/polarization.hpp"
#include "hbtsim/run.hpp"

namespace {

using namespace hbtsim;

constexpr double kPi = 3.14159265358979323846;

ExperimentSetup pair_setup() {
  return canonical_setup(two_detector_geometry(4e-5, 1e-5, 0.2, 1e-6), 0.8,
                         0.2, 0.1);
}

ExperimentSetup triangle_setup() {
  return triple_setup(three_slit_geometry(5e-5, 2e-5, 0.2, 1e-6),
                      PolarizationState::linear(0.0),
                      PolarizationState::circular(Handedness::right),
                      PolarizationState::linear(kPi / 4), 0.1);
}

// Deterministic dense complex matrix; entries of order one.
Eigen::MatrixXcd random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  return a;
}

// Random circuit with no consecutive near-orthogonal pair, matching what
// the trace and area routines accept without degeneracy.
std::vector<PolarizationState> random_circuit(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<PolarizationState> circuit;
  circuit.reserve(n);
  while (static_cast<int>(circuit.size()) < n) {
    Eigen::Vector3d v(gauss(rng), gauss(rng), gauss(rng));
    v.normalize();
    PolarizationState s = state_at({v.x(), v.y(), v.z()});
    if (!circuit.empty() && std::abs(circuit.back().overlap(s)) < 1e-2)
      continue;
    circuit.push_back(s);
  }
  return circuit;
}

void BM_Permanent(benchmark::State& state) {
  const Eigen::MatrixXcd a =
      random_matrix(static_cast<int>(state.range(0)), 42u);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
}
BENCHMARK(BM_Permanent)->DenseRange(2, 8);

void BM_PancharatnamTrace(benchmark::State& state) {
  const std::vector<PolarizationState> circuit =
      random_circuit(static_cast<int>(state.range(0)), 7u);
  for (auto _ : state) benchmark::DoNotOptimize(pancharatnam_trace(circuit));
}
BENCHMARK(BM_PancharatnamTrace)->RangeMultiplier(4)->Range(4, 64);

void BM_SolidAngle(benchmark::State& state) {
  const std::vector<PolarizationState> circuit =
      random_circuit(static_cast<int>(state.range(0)), 7u);
  std::vector<PoincarePoint> points;
  points.reserve(circuit.size());
  for (const PolarizationState& s : circuit) points.push_back(poincare_of(s));
  for (auto _ : state)
    benchmark::DoNotOptimize(geodesic_polygon_solid_angle(points));
}
BENCHMARK(BM_SolidAngle)->RangeMultiplier(4)->Range(4, 64);

void BM_PairCoincidence(benchmark::State& state) {
  const ExperimentSetup setup = pair_setup();
  for (auto _ : state) benchmark::DoNotOptimize(coincidence(setup));
}
BENCHMARK(BM_PairCoincidence);

void BM_WickExpansion(benchmark::State& state) {
  const ExperimentSetup setup = pair_setup();
  for (auto _ : state) benchmark::DoNotOptimize(wick_expansion(setup));
}
BENCHMARK(BM_WickExpansion);

void BM_TripleCoincidence(benchmark::State& state) {
  const ExperimentSetup setup = triangle_setup();
  for (auto _ : state) benchmark::DoNotOptimize(triple_coincidence(setup));
}
BENCHMARK(BM_TripleCoincidence);

void BM_CyclicCumulant(benchmark::State& state) {
  const ExperimentSetup setup = triangle_setup();
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_cumulant(setup));
}
BENCHMARK(BM_CyclicCumulant);

void BM_GeometricIsolation(benchmark::State& state) {
  const ExperimentSetup setup = triangle_setup();
  for (auto _ : state) benchmark::DoNotOptimize(geometric_isolation(setup));
}
BENCHMARK(BM_GeometricIsolation)->Unit(benchmark::kMillisecond);

// Oracle cost scales as (cutoff + 1)^(2 * sources) columns times 2^order
// polarisation masks; these keep the canonical shapes.
void BM_FockMean(benchmark::State& state) {
  const ExperimentSetup setup = pair_setup();
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fock_mean_count(setup, 0, cutoff));
}
BENCHMARK(BM_FockMean)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_FockCoincidence(benchmark::State& state) {
  const ExperimentSetup setup = pair_setup();
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fock_coincidence(setup, cutoff));
}
BENCHMARK(BM_FockCoincidence)
    ->DenseRange(2, 6, 2)
    ->Unit(benchmark::kMillisecond);

void BM_FockTriple(benchmark::State& state) {
  const ExperimentSetup setup = triangle_setup();
  const int cutoff = static_cast<int>(state.range(0));
  const int detectors[] = {0, 1, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fock_normally_ordered_moment(setup, detectors, cutoff));
}
BENCHMARK(BM_FockTriple)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ReducedEntropy(benchmark::State& state) {
  const OrbitalState phi = OrbitalState::path_short();
  const OrbitalState psi(1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2);
  const TwoPhotonOrbitalState v = output_state(phi, psi, kPi / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        von_neumann_entropy(reduced_density(v, Subsystem::three)));
  }
}
BENCHMARK(BM_ReducedEntropy);

void BM_SweepPhi(benchmark::State& state) {
  RunConfig config = default_config(ExperimentKind::two_detector);
  config.steps = 64;
  config.oracle = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_sweep(config, SweepKind::phi));
}
BENCHMARK(BM_SweepPhi)->Unit(benchmark::kMillisecond);

void BM_SweepEntanglement(benchmark::State& state) {
  RunConfig config = default_config(ExperimentKind::entanglement);
  config.steps = 64;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_sweep(config, SweepKind::entanglement));
}
BENCHMARK(BM_SweepEntanglement)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
