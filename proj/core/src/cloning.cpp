// Copyright 2026 The qagi-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qagi/cloning.hpp"

#include <cmath>
#include <numbers>

#include "qagi/error.hpp"
#include "qagi/learning.hpp"

namespace qagi {

namespace {

Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm_of(const std::vector<Complex>& v) { return std::sqrt(inner(v, v).real()); }

void require_unit_qubit(const std::vector<Complex>& v, const Tolerances& tol) {
  if (v.size() != 2)
    throw DimensionError("cloning optimizer: only qubit states are supported");
  if (std::abs(norm_of(v) - 1.0) > tol.numeric)
    throw ValidationError("cloning: state vector is not normalized");
}

// cos(a)|0> + e^{i p} sin(a)|1>
std::array<Complex, 2> bloch_ket(double a, double p) {
  return {Complex(std::cos(a), 0.0), std::polar(std::sin(a), p)};
}

// Rz(b) Ry(a) as a 2x2 unitary.
void rotation(double a, double b, Complex out[2][2]) {
  const double ca = std::cos(a / 2), sa = std::sin(a / 2);
  const Complex em = std::polar(1.0, -b / 2), ep = std::polar(1.0, b / 2);
  out[0][0] = em * ca;
  out[0][1] = em * -sa;
  out[1][0] = ep * sa;
  out[1][1] = ep * ca;
}

// Applies a single-qubit gate to qubit `q` (0 = most significant) of a
// 3-qubit state vector in place.
void apply_1q(std::array<Complex, 8>& state, const Complex gate[2][2], unsigned q) {
  const unsigned mask = 1u << (2 - q);
  for (unsigned i = 0; i < 8; ++i) {
    if (i & mask) continue;
    const Complex lo = state[i];
    const Complex hi = state[i | mask];
    state[i] = gate[0][0] * lo + gate[0][1] * hi;
    state[i | mask] = gate[1][0] * lo + gate[1][1] * hi;
  }
}

// Controlled-Ry(phi) with the given control and target qubits
// (0 = most significant). phi = pi reproduces a CNOT up to target phase.
void apply_cry(std::array<Complex, 8>& state, double phi, unsigned control,
               unsigned target) {
  const unsigned cmask = 1u << (2 - control);
  const unsigned tmask = 1u << (2 - target);
  const double ch = std::cos(phi / 2), sh = std::sin(phi / 2);
  for (unsigned i = 0; i < 8; ++i) {
    if (!(i & cmask) || (i & tmask)) continue;
    const Complex lo = state[i];
    const Complex hi = state[i | tmask];
    state[i] = ch * lo - sh * hi;
    state[i | tmask] = sh * lo + ch * hi;
  }
}

// Deterministic compass polish: coordinate +-step moves accepted only on
// improvement, step halved when a full sweep stalls. Handles the kinks
// of the max-min objective that golden-section refinement misses.
void pattern_polish(const std::function<double(std::span<const double>)>& score,
                    std::vector<double>& params, double& best) {
  double step = 0.05;
  while (step > 1e-7) {
    bool improved = false;
    for (std::size_t c = 0; c < params.size(); ++c) {
      for (double direction : {+1.0, -1.0}) {
        const double original = params[c];
        params[c] = original + direction * step;
        const double value = score(params);
        if (value > best) {
          best = value;
          improved = true;
          break;
        }
        params[c] = original;
      }
    }
    if (!improved) step *= 0.5;
  }
}

}  // namespace

CloningFeasibility nocloning_check(const std::vector<Complex>& psi,
                                   const std::vector<Complex>& phi,
                                   const Tolerances& tol) {
  if (psi.size() != phi.size())
    throw DimensionError("nocloning_check: state dimensions differ");
  if (std::abs(norm_of(psi) - 1.0) > tol.numeric ||
      std::abs(norm_of(phi) - 1.0) > tol.numeric)
    throw ValidationError("nocloning_check: inputs must be unit vectors");

  CloningFeasibility out;
  out.overlap = std::abs(inner(psi, phi));
  out.overlap_squared = out.overlap * out.overlap;
  out.feasible = out.overlap <= tol.numeric || out.overlap >= 1.0 - tol.numeric;
  return out;
}

std::size_t unitary_ancilla_param_count() { return 27; }
std::size_t measure_prepare_param_count() { return 10; }

double unitary_ancilla_fidelity(std::span<const double> params,
                                const std::vector<Complex>& psi) {
  // Source (x) blank (x) ancilla, source most significant. Circuit:
  //   L1, CRy(p24: S->B), L2, CRy(p25: S->A), L3, CRy(p26: B->S), L4
  // with one Ry/Rz pair per qubit per layer. At the copier point
  // (layers 0, p24 = p25 = pi, p26 = 0) basis states copy exactly.
  std::array<Complex, 8> state{};
  state[0] = psi[0];  // |x00>
  state[4] = psi[1];

  Complex gate[2][2];
  auto layer = [&](std::size_t offset) {
    for (unsigned q = 0; q < 3; ++q) {
      rotation(params[offset + 2 * q], params[offset + 2 * q + 1], gate);
      apply_1q(state, gate, q);
    }
  };
  layer(0);
  apply_cry(state, params[24], 0, 1);
  layer(6);
  apply_cry(state, params[25], 0, 2);
  layer(12);
  apply_cry(state, params[26], 1, 0);
  layer(18);

  // F = sum_a |<psi psi a|state>|^2, the two-copy fidelity after tracing
  // out the ancilla.
  double fidelity = 0.0;
  for (unsigned a = 0; a < 2; ++a) {
    Complex amp = 0.0;
    for (unsigned s = 0; s < 2; ++s)
      for (unsigned b = 0; b < 2; ++b)
        amp += std::conj(psi[s] * psi[b]) * state[(s << 2) | (b << 1) | a];
    fidelity += std::norm(amp);
  }
  return fidelity;
}

double measure_prepare_fidelity(std::span<const double> params,
                                const std::vector<Complex>& psi) {
  // Measurement basis {m0, m1} from (mu, nu); per-outcome product
  // preparations from (alpha, phi) pairs.
  const auto m0 = bloch_ket(params[0], params[1]);
  const std::array<Complex, 2> m1 = {-std::conj(std::polar(1.0, params[1])) *
                                         Complex(std::sin(params[0]), 0.0),
                                     Complex(std::cos(params[0]), 0.0)};
  double fidelity = 0.0;
  for (unsigned k = 0; k < 2; ++k) {
    const auto& m = k == 0 ? m0 : m1;
    const Complex overlap = std::conj(m[0]) * psi[0] + std::conj(m[1]) * psi[1];
    const double prob = std::norm(overlap);
    const auto p = bloch_ket(params[2 + 4 * k], params[3 + 4 * k]);
    const auto q = bloch_ket(params[4 + 4 * k], params[5 + 4 * k]);
    const Complex pp = std::conj(psi[0]) * p[0] + std::conj(psi[1]) * p[1];
    const Complex qq = std::conj(psi[0]) * q[0] + std::conj(psi[1]) * q[1];
    fidelity += prob * std::norm(pp) * std::norm(qq);
  }
  return fidelity;
}

CloneOptimum clone_fidelity_optimize(const std::vector<std::vector<Complex>>& states,
                                     unsigned iters, std::uint64_t seed,
                                     const Tolerances& tol, unsigned restarts) {
  if (states.empty())
    throw ValidationError("clone_fidelity_optimize: no input states");
  for (const auto& s : states) require_unit_qubit(s, tol);

  const auto worst_case = [&](auto&& fidelity_fn) {
    return [&states, fidelity_fn](std::span<const double> params) {
      double worst = 1.0;
      for (const auto& s : states)
        worst = std::min(worst, fidelity_fn(params, s));
      return worst;
    };
  };

  // Multistart per family: the structured warm start first, then seeded
  // random starts, each taken through coordinate descent and the compass
  // polish. Candidates are accepted only on improvement.
  const auto optimize_family = [&](auto&& fidelity_fn, std::vector<double> warm_start,
                                   std::uint64_t stream) {
    const auto score = worst_case(fidelity_fn);
    BoxMaximizeResult best{warm_start, score(warm_start)};
    if (iters == 0) return best;
    SplitMix64 rng = SplitMix64::stream(seed, stream);
    for (unsigned r = 0; r <= restarts; ++r) {
      std::vector<double> start = warm_start;
      if (r > 0)
        for (double& x : start) x = rng.next_double() * 2.0 * std::numbers::pi;
      BoxMaximizeResult candidate =
          maximize_in_box(score, std::move(start), 0.0, 2.0 * std::numbers::pi, iters,
                          rng.next_u64(), 0);
      pattern_polish(score, candidate.params, candidate.score);
      if (candidate.score > best.score) best = std::move(candidate);
    }
    return best;
  };

  // Unitary-with-ancilla family, warm-started at the exact basis copier.
  std::vector<double> unitary_init(unitary_ancilla_param_count(), 0.0);
  unitary_init[24] = std::numbers::pi;
  unitary_init[25] = std::numbers::pi;
  const BoxMaximizeResult unitary_best =
      optimize_family(unitary_ancilla_fidelity, std::move(unitary_init), 0);

  // Measure-and-prepare family, warm-started at "prepare two copies of
  // the first state" (exact optimum for a single known state).
  const auto& first = states.front();
  const double alpha = std::atan2(std::abs(first[1]), std::abs(first[0]));
  double phase = std::arg(first[1]) - std::arg(first[0]);
  if (phase < 0) phase += 2.0 * std::numbers::pi;
  std::vector<double> mp_init(measure_prepare_param_count(), 0.0);
  for (std::size_t k = 2; k < mp_init.size(); k += 2) {
    mp_init[k] = alpha;
    mp_init[k + 1] = phase;
  }
  const BoxMaximizeResult mp_best =
      optimize_family(measure_prepare_fidelity, std::move(mp_init), 1);

  CloneOptimum out;
  if (unitary_best.score >= mp_best.score) {
    out.params = unitary_best.params;
    out.worst_case_fidelity = unitary_best.score;
    out.family = "unitary_ancilla";
  } else {
    out.params = mp_best.params;
    out.worst_case_fidelity = mp_best.score;
    out.family = "measure_prepare";
  }
  if (!std::isfinite(out.worst_case_fidelity))
    throw ValidationError("clone_fidelity_optimize: non-finite fidelity");
  return out;
}

}  // namespace qagi
