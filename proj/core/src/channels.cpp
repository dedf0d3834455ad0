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

#include "qagi/channels.hpp"

#include <cmath>
#include <sstream>

#include "qagi/eigen.hpp"
#include "qagi/error.hpp"

namespace qagi {

namespace {

// sum_i K_i^dag K_i for a family of equal-shape operators.
ComplexMatrix kraus_gram(const std::vector<ComplexMatrix>& kraus) {
  ComplexMatrix acc(kraus.front().cols(), kraus.front().cols());
  for (const auto& k : kraus) acc += k.adjoint() * k;
  return acc;
}

void require_equal_shapes(const std::vector<ComplexMatrix>& ops, const char* what) {
  if (ops.empty()) throw ValidationError(std::string(what) + ": empty operator list");
  for (const auto& op : ops) {
    if (op.rows() != ops.front().rows() || op.cols() != ops.front().cols())
      throw DimensionError(std::string(what) + ": operator shape mismatch");
    if (!op.is_finite())
      throw ValidationError(std::string(what) + ": non-finite operator entries");
  }
}

}  // namespace

CtcChannel make_ctc(Alphabet in, Alphabet out, std::vector<std::vector<double>> kernel,
                    const Tolerances& tol) {
  if (kernel.size() != out.size())
    throw DimensionError("ctc kernel: row count != output alphabet size");
  for (const auto& row : kernel)
    if (row.size() != in.size())
      throw DimensionError("ctc kernel: column count != input alphabet size");
  for (std::size_t c = 0; c < in.size(); ++c) {
    double col_sum = 0.0;
    for (std::size_t r = 0; r < out.size(); ++r) {
      const double v = kernel[r][c];
      if (!std::isfinite(v) || v < -tol.trace)
        throw ValidationError("ctc kernel: negative or non-finite entry");
      col_sum += v;
    }
    if (std::abs(col_sum - 1.0) > tol.trace) {
      std::ostringstream msg;
      msg << "ctc kernel: column " << c << " sums to " << col_sum << ", not 1";
      throw ValidationError(msg.str());
    }
  }
  return CtcChannel{std::move(in), std::move(out), std::move(kernel)};
}

ClassicalDistribution apply_ctc(const CtcChannel& ch, const ClassicalDistribution& d) {
  if (d.alphabet != ch.in_alphabet)
    throw DimensionError("apply_ctc: distribution alphabet != channel input alphabet");
  std::vector<double> out(ch.out_alphabet.size(), 0.0);
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < d.probs.size(); ++c)
      out[r] += ch.kernel[r][c] * d.probs[c];
  return ClassicalDistribution{ch.out_alphabet, std::move(out)};
}

CtqChannel make_ctq(Alphabet in, std::vector<DensityOperator> encodings,
                    const Tolerances& tol) {
  if (encodings.size() != in.size())
    throw DimensionError("ctq: one encoding required per input symbol");
  for (const auto& enc : encodings) {
    if (enc.dims != encodings.front().dims)
      throw ValidationError("ctq: encodings have unequal subsystem dimensions");
    validate_density(enc.matrix, enc.dims, tol);
  }
  return CtqChannel{std::move(in), std::move(encodings)};
}

DensityOperator apply_ctq(const CtqChannel& ch, const ClassicalDistribution& d) {
  if (d.alphabet != ch.in_alphabet)
    throw DimensionError("apply_ctq: distribution alphabet != channel input alphabet");
  ComplexMatrix acc(ch.encodings.front().matrix.rows(), ch.encodings.front().matrix.cols());
  for (std::size_t i = 0; i < d.probs.size(); ++i)
    acc += Complex(d.probs[i], 0.0) * ch.encodings[i].matrix;
  return DensityOperator{ch.encodings.front().dims, std::move(acc)};
}

Povm make_povm(Alphabet outcomes, std::vector<ComplexMatrix> elements,
               const Tolerances& tol) {
  if (elements.size() != outcomes.size())
    throw DimensionError("povm: one element required per outcome");
  require_equal_shapes(elements, "povm");
  if (!elements.front().is_square())
    throw DimensionError("povm: elements must be square");
  const CptpCheck completeness = validate_cptp(elements, tol);
  if (!completeness.ok)
    throw ValidationError("povm: effects do not complete to identity; " + completeness.detail);
  return Povm{std::move(outcomes), std::move(elements)};
}

Povm projective_povm(std::size_t d) {
  std::vector<ComplexMatrix> elements;
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix m(d, d);
    m.at(i, i) = 1.0;
    elements.push_back(std::move(m));
  }
  return make_povm(numeric_alphabet(d), std::move(elements));
}

Povm basis_povm(const std::vector<std::vector<Complex>>& basis_vectors,
                const Tolerances& tol) {
  if (basis_vectors.empty()) throw ValidationError("basis_povm: no vectors");
  const std::size_t d = basis_vectors.front().size();
  std::vector<ComplexMatrix> elements;
  for (const auto& v : basis_vectors) {
    if (v.size() != d) throw DimensionError("basis_povm: vector length mismatch");
    ComplexMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        m.at(r, c) = v[r] * std::conj(v[c]);
    elements.push_back(std::move(m));
  }
  return make_povm(numeric_alphabet(basis_vectors.size()), std::move(elements), tol);
}

ClassicalDistribution qtc_distribution(const Povm& p, const DensityOperator& rho,
                                       const Tolerances& tol) {
  if (p.dim() != rho.dim())
    throw DimensionError("qtc_distribution: measurement/state dimension mismatch");
  std::vector<double> probs;
  probs.reserve(p.elements.size());
  for (const auto& m : p.elements) {
    const Complex t = (m * rho.matrix * m.adjoint()).trace();
    probs.push_back(t.real());
  }
  return make_distribution(p.outcome_alphabet, std::move(probs), tol);
}

QtcSample qtc_sample(const Povm& p, const DensityOperator& rho, std::uint64_t rng_seed) {
  SplitMix64 rng(rng_seed);
  return qtc_sample(p, rho, rng);
}

QtcSample qtc_sample(const Povm& p, const DensityOperator& rho, SplitMix64& rng) {
  const Tolerances& tol = tolerances();
  const ClassicalDistribution dist = qtc_distribution(p, rho, tol);
  const std::size_t k = sample_index(dist.probs, rng.next_double(), tol.prob_floor);
  const double prob = dist.probs[k];
  ComplexMatrix post = p.elements[k] * rho.matrix * p.elements[k].adjoint();
  post *= Complex(1.0 / prob, 0.0);
  return QtcSample{k, p.outcome_alphabet.at(k), prob, DensityOperator{rho.dims, std::move(post)}};
}

QtqChannel make_qtq(std::vector<ComplexMatrix> kraus, const Tolerances& tol) {
  require_equal_shapes(kraus, "qtq");
  if (!kraus.front().is_square())
    throw DimensionError("qtq: Kraus operators must be square");
  const CptpCheck check = validate_cptp(kraus, tol);
  if (!check.ok)
    throw ValidationError("qtq: Kraus family is not trace-preserving; " + check.detail);
  return QtqChannel{std::move(kraus)};
}

QtqChannel unitary_channel(const ComplexMatrix& u, const Tolerances& tol) {
  if (!u.is_square()) throw DimensionError("unitary_channel: matrix not square");
  const ComplexMatrix gram = u.adjoint() * u;
  if (max_abs_diff(gram, ComplexMatrix::identity(u.rows())) > tol.cptp)
    throw ValidationError("unitary_channel: matrix is not unitary within tolerance");
  return QtqChannel{{u}};
}

DensityOperator apply_qtq(const QtqChannel& ch, const DensityOperator& rho) {
  if (ch.dim() != rho.dim())
    throw DimensionError("apply_qtq: channel/state dimension mismatch");
  ComplexMatrix acc(rho.matrix.rows(), rho.matrix.cols());
  for (const auto& k : ch.kraus) acc += k * rho.matrix * k.adjoint();
  return DensityOperator{rho.dims, std::move(acc)};
}

QtqChannel compose(const QtqChannel& second, const QtqChannel& first,
                   const Tolerances& tol) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(second.kraus.size() * first.kraus.size());
  for (const auto& s : second.kraus)
    for (const auto& f : first.kraus)
      kraus.push_back(s * f);
  return make_qtq(std::move(kraus), tol);
}

CptpCheck validate_cptp(const std::vector<ComplexMatrix>& kraus, const Tolerances& tol) {
  require_equal_shapes(kraus, "validate_cptp");
  const ComplexMatrix gram = kraus_gram(kraus);
  const double dev = max_abs_diff(gram, ComplexMatrix::identity(gram.rows()));
  CptpCheck out;
  out.deviation = dev;
  out.ok = dev <= tol.cptp;
  if (!out.ok) {
    std::ostringstream msg;
    msg << "max |sum K^dag K - I| = " << dev;
    out.detail = msg.str();
  }
  return out;
}

Instrument make_instrument(Alphabet outcomes, std::vector<std::vector<ComplexMatrix>> branches,
                           const Tolerances& tol) {
  if (branches.size() != outcomes.size())
    throw DimensionError("instrument: one branch required per outcome");
  std::vector<ComplexMatrix> all;
  for (const auto& branch : branches) {
    require_equal_shapes(branch, "instrument branch");
    // Branch must be trace-non-increasing: largest eigenvalue of its
    // partial gram at most 1.
    const ComplexMatrix gram = kraus_gram(branch);
    const auto eigenvalues = hermitian_eigenvalues(gram, tol);
    if (eigenvalues.front() > 1.0 + tol.cptp)
      throw ValidationError("instrument: branch is trace-increasing");
    all.insert(all.end(), branch.begin(), branch.end());
  }
  const CptpCheck total = validate_cptp(all, tol);
  if (!total.ok)
    throw ValidationError("instrument: branches do not sum to a trace-preserving channel; " +
                          total.detail);
  return Instrument{std::move(outcomes), std::move(branches)};
}

Instrument instrument_from_povm(const Povm& p, const Tolerances& tol) {
  std::vector<std::vector<ComplexMatrix>> branches;
  branches.reserve(p.elements.size());
  for (const auto& m : p.elements) branches.push_back({m});
  return make_instrument(p.outcome_alphabet, std::move(branches), tol);
}

std::vector<double> instrument_probabilities(const Instrument& instr,
                                             const DensityOperator& rho) {
  if (instr.dim() != rho.dim())
    throw DimensionError("instrument: channel/state dimension mismatch");
  std::vector<double> probs;
  probs.reserve(instr.branches.size());
  for (const auto& branch : instr.branches) {
    double p = 0.0;
    for (const auto& k : branch)
      p += (k * rho.matrix * k.adjoint()).trace().real();
    probs.push_back(p);
  }
  return probs;
}

InstrumentOutcome apply_instrument(const Instrument& instr, const DensityOperator& rho,
                                   std::uint64_t rng_seed) {
  SplitMix64 rng(rng_seed);
  return apply_instrument(instr, rho, rng);
}

InstrumentOutcome apply_instrument(const Instrument& instr, const DensityOperator& rho,
                                   SplitMix64& rng) {
  const Tolerances& tol = tolerances();
  const std::vector<double> probs = instrument_probabilities(instr, rho);
  double total = 0.0;
  for (double p : probs) total += p;
  if (std::abs(total - 1.0) > tol.trace)
    throw ValidationError("instrument: branch probabilities sum to " + std::to_string(total));

  const std::size_t k = sample_index(probs, rng.next_double(), tol.prob_floor);
  ComplexMatrix post(rho.matrix.rows(), rho.matrix.cols());
  for (const auto& op : instr.branches[k]) post += op * rho.matrix * op.adjoint();
  post *= Complex(1.0 / probs[k], 0.0);
  return InstrumentOutcome{k, instr.outcome_alphabet.at(k), probs[k],
                           DensityOperator{rho.dims, std::move(post)}};
}

DensityOperator measurement_channel(const Povm& p, const DensityOperator& rho) {
  if (p.dim() != rho.dim())
    throw DimensionError("measurement_channel: measurement/state dimension mismatch");
  // Pointer register dim: at least 2 so the output is a valid register.
  const std::size_t pointer_dim = std::max<std::size_t>(p.elements.size(), 2);
  const std::size_t d = rho.dim();
  ComplexMatrix out(d * pointer_dim, d * pointer_dim);
  for (std::size_t k = 0; k < p.elements.size(); ++k) {
    const ComplexMatrix block = p.elements[k] * rho.matrix * p.elements[k].adjoint();
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        out.at(r * pointer_dim + k, c * pointer_dim + k) += block.at(r, c);
  }
  std::vector<std::size_t> dims = rho.dims;
  dims.push_back(pointer_dim);
  return DensityOperator{std::move(dims), std::move(out)};
}

}  // namespace qagi
