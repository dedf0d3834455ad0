// Microbenchmarks for the inner kernels: tensor algebra, channel
// application, expectimax planning and the assignment search.

#include <benchmark/benchmark.h>

#include <numbers>

#include "qagi/aixi.hpp"
#include "qagi/channels.hpp"
#include "qagi/chsh.hpp"
#include "qagi/density.hpp"
#include "qagi/eigen.hpp"
#include "qagi/json_io.hpp"
#include "qagi/kochen_specker.hpp"

using namespace qagi;

namespace {

DensityOperator random_state(std::uint64_t seed, std::vector<std::size_t> dims) {
  SplitMix64 rng(seed);
  std::size_t d = 1;
  for (std::size_t s : dims) d *= s;
  ComplexMatrix g(d, d);
  for (auto& z : g.entries())
    z = Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real(), 0.0);
  return validate_density(rho, std::move(dims));
}

void BM_kron(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = random_state(1, {n}).matrix;
  const ComplexMatrix b = random_state(2, {n}).matrix;
  for (auto _ : state) {
    auto out = kron(a, b);
    benchmark::DoNotOptimize(out);
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_kron)->Arg(2)->Arg(4)->Arg(8)->Complexity();

void BM_partial_trace(benchmark::State& state) {
  const DensityOperator joint = random_state(3, {4, 4});
  for (auto _ : state) {
    auto out = partial_trace(joint, {0});
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_partial_trace);

void BM_hermitian_eigen(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const DensityOperator rho = random_state(4, {n});
  for (auto _ : state) {
    auto out = hermitian_eigen(rho.matrix);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_hermitian_eigen)->Arg(4)->Arg(16)->Arg(64);

void BM_apply_qtq(benchmark::State& state) {
  std::vector<ComplexMatrix> kraus = {ComplexMatrix::identity(2), pauli_x(), pauli_y(),
                                      pauli_z()};
  for (auto& k : kraus) k *= Complex(0.5, 0.0);
  const QtqChannel channel = make_qtq(kraus);
  const DensityOperator rho = random_state(5, {2});
  for (auto _ : state) {
    auto out = apply_qtq(channel, rho);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_apply_qtq);

void BM_apply_instrument(benchmark::State& state) {
  const Instrument instr = instrument_from_povm(projective_povm(4));
  const DensityOperator rho = random_state(6, {4});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto out = apply_instrument(instr, rho, seed++);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_apply_instrument);

void BM_chsh(benchmark::State& state) {
  ChshSetting setting;
  setting.state = pure_state(ket_singlet(), {2, 2});
  setting.a = 0.0;
  setting.a_prime = std::numbers::pi / 2;
  setting.b = std::numbers::pi / 4;
  setting.b_prime = -std::numbers::pi / 4;
  for (auto _ : state) {
    auto s = chsh_quantum(setting);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_chsh);

void BM_aixi_policy(benchmark::State& state) {
  const unsigned horizon = static_cast<unsigned>(state.range(0));
  const Alphabet actions = make_alphabet({"A", "B"});
  const Alphabet percepts = make_alphabet({"win", "lose"});
  const EnvironmentModel nu1 = memoryless_environment(
      "nu1", 2, actions, percepts, {1.0, 0.0}, {{0.9, 0.1}, {0.1, 0.9}});
  const EnvironmentModel nu2 = memoryless_environment(
      "nu2", 2, actions, percepts, {1.0, 0.0}, {{0.1, 0.9}, {0.9, 0.1}});
  const MixtureState mix = prior_weights({nu1, nu2});
  const PolicyConfig cfg{horizon, 1.0};
  for (auto _ : state) {
    auto decision = aixi_policy(mix, {}, cfg);
    benchmark::DoNotOptimize(decision);
  }
}
BENCHMARK(BM_aixi_policy)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_ks_search(benchmark::State& state) {
  const RaySystem system =
      load_ray_system(std::filesystem::path(QAGI_DATA_DIR) / "ks18_d4.json");
  for (auto _ : state) {
    auto result = ks_assignment_search(system);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ks_search);

}  // namespace

BENCHMARK_MAIN();
