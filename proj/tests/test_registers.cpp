#include <doctest.h>

#include <cmath>
#include <map>

#include "qagi/channels.hpp"
#include "qagi/error.hpp"
#include "test_helpers.hpp"

using namespace qagi;

namespace {

Povm z_povm() { return projective_povm(2); }

}  // namespace

TEST_CASE("ctc: identity, bit flip, and non-stochastic rejection") {
  const Alphabet bits = numeric_alphabet(2);
  const CtcChannel id = make_ctc(bits, bits, {{1.0, 0.0}, {0.0, 1.0}});
  const ClassicalDistribution d = make_distribution(bits, {0.3, 0.7});
  const ClassicalDistribution out = apply_ctc(id, d);
  CHECK(out.probs[0] == doctest::Approx(0.3));
  CHECK(out.probs[1] == doctest::Approx(0.7));

  const CtcChannel flip = make_ctc(bits, bits, {{0.0, 1.0}, {1.0, 0.0}});
  const ClassicalDistribution delta0 = point_mass(bits, 0);
  const ClassicalDistribution flipped = apply_ctc(flip, delta0);
  CHECK(flipped.probs[0] == 0.0);
  CHECK(flipped.probs[1] == 1.0);

  CHECK_THROWS_AS(make_ctc(bits, bits, {{0.9, 0.0}, {0.0, 0.9}}), ValidationError);
}

TEST_CASE("ctq: mixtures, point masses, and shape violations") {
  const Alphabet bits = numeric_alphabet(2);
  const CtqChannel encoder = make_ctq(bits, {basis_state(0, 2), basis_state(1, 2)});

  const DensityOperator mixed = apply_ctq(encoder, uniform_distribution(bits));
  CHECK(max_abs_diff(mixed.matrix, maximally_mixed({2}).matrix) < tolerances().numeric);

  const DensityOperator pure = apply_ctq(encoder, point_mass(bits, 0));
  CHECK(max_abs_diff(pure.matrix, basis_state(0, 2).matrix) < tolerances().numeric);

  CHECK_THROWS_AS(make_ctq(bits, {basis_state(0, 2), basis_state(0, 3)}), ValidationError);
}

TEST_CASE("qtc_distribution: Born rule and completeness rejection") {
  const DensityOperator plus = pure_state(ket_plus(), {2});
  const ClassicalDistribution d = qtc_distribution(z_povm(), plus);
  CHECK(d.probs[0] == doctest::Approx(0.5));
  CHECK(d.probs[1] == doctest::Approx(0.5));

  const ClassicalDistribution certain = qtc_distribution(z_povm(), basis_state(0, 2));
  CHECK(certain.probs[0] == doctest::Approx(1.0));

  // Effects that do not complete to identity are rejected at construction.
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= Complex(0.5, 0.0);
  CHECK_THROWS_AS(make_povm(numeric_alphabet(1), {half}), ValidationError);
}

TEST_CASE("qtc_sample: certainty, determinism, post-state collapse") {
  const QtcSample certain = qtc_sample(z_povm(), basis_state(0, 2), 42);
  CHECK(certain.outcome == "0");
  CHECK(certain.prob == doctest::Approx(1.0));
  CHECK(max_abs_diff(certain.post_state.matrix, basis_state(0, 2).matrix) <
        tolerances().numeric);

  const DensityOperator plus = pure_state(ket_plus(), {2});
  const QtcSample first = qtc_sample(z_povm(), plus, 7);
  const QtcSample again = qtc_sample(z_povm(), plus, 7);
  CHECK(first.outcome == again.outcome);
  CHECK(first.prob == again.prob);
  CHECK(max_abs_diff(first.post_state.matrix, again.post_state.matrix) == 0.0);
  // collapse onto the observed basis state
  CHECK(max_abs_diff(first.post_state.matrix,
                     basis_state(first.outcome_index, 2).matrix) < tolerances().numeric);
}

TEST_CASE("qtc_sample frequencies converge to the Born distribution") {
  const DensityOperator plus = pure_state(ket_plus(), {2});
  const ClassicalDistribution oracle = qtc_distribution(z_povm(), plus);
  constexpr int kDraws = 100000;
  int zeros = 0;
  SplitMix64 rng(123);
  for (int i = 0; i < kDraws; ++i)
    if (qtc_sample(z_povm(), plus, rng).outcome_index == 0) ++zeros;
  const double freq = static_cast<double>(zeros) / kDraws;
  CHECK(std::abs(freq - oracle.probs[0]) <= 0.01);
}

TEST_CASE("qtq: unitary action, depolarizing fixed point, completeness") {
  const QtqChannel x_gate = unitary_channel(pauli_x());
  const DensityOperator flipped = apply_qtq(x_gate, basis_state(0, 2));
  CHECK(max_abs_diff(flipped.matrix, basis_state(1, 2).matrix) < tolerances().numeric);

  // Fully depolarizing qubit channel via the four normalized Paulis.
  std::vector<ComplexMatrix> kraus = {ComplexMatrix::identity(2), pauli_x(), pauli_y(),
                                      pauli_z()};
  for (auto& k : kraus) k *= Complex(0.5, 0.0);
  const QtqChannel depolarize = make_qtq(kraus);
  SplitMix64 rng(31);
  const DensityOperator rho = test::random_density(rng, {2});
  const DensityOperator out = apply_qtq(depolarize, rho);
  CHECK(max_abs_diff(out.matrix, maximally_mixed({2}).matrix) < tolerances().numeric);

  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= Complex(0.5, 0.0);
  CHECK_THROWS_AS(make_qtq({half}), ValidationError);
}

TEST_CASE("validate_cptp: diagnostics") {
  CHECK(validate_cptp({ComplexMatrix::identity(2)}).ok);
  CHECK(validate_cptp({basis_state(0, 2).matrix, basis_state(1, 2).matrix}).ok);

  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= Complex(0.5, 0.0);
  const CptpCheck check = validate_cptp({half});
  CHECK_FALSE(check.ok);
  CHECK(check.deviation == doctest::Approx(0.75));
  CHECK(!check.detail.empty());

  CHECK_THROWS_AS(validate_cptp({ComplexMatrix::identity(2), ComplexMatrix::identity(3)}),
                  DimensionError);
}

TEST_CASE("apply_instrument: projective collapse and eigenstates") {
  const Instrument z_instr = instrument_from_povm(z_povm());

  const InstrumentOutcome certain = apply_instrument(z_instr, basis_state(0, 2), 5);
  CHECK(certain.outcome == "0");
  CHECK(certain.prob == doctest::Approx(1.0));
  CHECK(max_abs_diff(certain.post_state.matrix, basis_state(0, 2).matrix) <
        tolerances().numeric);

  const DensityOperator plus = pure_state(ket_plus(), {2});
  const InstrumentOutcome branch = apply_instrument(z_instr, plus, 5);
  CHECK(branch.prob == doctest::Approx(0.5));
  CHECK(max_abs_diff(branch.post_state.matrix,
                     basis_state(branch.outcome_index, 2).matrix) < tolerances().numeric);
}

TEST_CASE("instrument construction rejects trace deficits") {
  // Branches scaled to 0.8 of a trace-preserving family.
  const double s = std::sqrt(0.8);
  ComplexMatrix m0 = basis_state(0, 2).matrix;
  ComplexMatrix m1 = basis_state(1, 2).matrix;
  m0 *= Complex(s, 0.0);
  m1 *= Complex(s, 0.0);
  CHECK_THROWS_AS(make_instrument(numeric_alphabet(2), {{m0}, {m1}}), ValidationError);
}

TEST_CASE("instrument normalization over random instruments and states") {
  SplitMix64 rng(37);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t d = 2 + (rep % 3);
    const Instrument instr = test::random_instrument(rng, d, 2 + (rep % 2));
    const DensityOperator rho = test::random_density(rng, {d});
    const auto probs = instrument_probabilities(instr, rho);
    double total = 0.0;
    for (double p : probs) total += p;
    CHECK(std::abs(total - 1.0) < tolerances().trace);
  }
}

TEST_CASE("measurement_channel: record states and non-injectivity witness pair") {
  const DensityOperator plus = pure_state(ket_plus(), {2});
  const DensityOperator record = measurement_channel(z_povm(), plus);
  CHECK(record.dims == std::vector<std::size_t>{2, 2});
  // (1/2)|0><0| (x) |0><0| + (1/2)|1><1| (x) |1><1|
  const ComplexMatrix expected =
      Complex(0.5, 0.0) * kron(basis_state(0, 2).matrix, basis_state(0, 2).matrix) +
      Complex(0.5, 0.0) * kron(basis_state(1, 2).matrix, basis_state(1, 2).matrix);
  CHECK(max_abs_diff(record.matrix, expected) < tolerances().numeric);

  // The maximally mixed state produces the same record: coherences erased.
  const DensityOperator record_mixed = measurement_channel(z_povm(), maximally_mixed({2}));
  CHECK(max_abs_diff(record_mixed.matrix, record.matrix) < tolerances().numeric);

  // Trivial single-effect measurement: rho (x) |0><0| on a dim-2 pointer.
  const Povm trivial = make_povm(numeric_alphabet(1), {ComplexMatrix::identity(2)});
  const DensityOperator untouched = measurement_channel(trivial, plus);
  CHECK(max_abs_diff(untouched.matrix, kron(plus.matrix, basis_state(0, 2).matrix)) <
        tolerances().numeric);
}

TEST_CASE("channel outputs stay valid states (closure)") {
  SplitMix64 rng(41);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityOperator rho = test::random_density(rng, {2});
    const QtqChannel channel = make_qtq(test::random_kraus(rng, 2, 2));
    const DensityOperator evolved = apply_qtq(channel, rho);
    CHECK(check_density(evolved.matrix, evolved.dims).ok);

    const DensityOperator record = measurement_channel(z_povm(), rho);
    CHECK(check_density(record.matrix, record.dims).ok);
    CHECK(std::abs(record.matrix.trace() - Complex(1.0, 0.0)) < tolerances().trace);
  }
}

TEST_CASE("channel application rejects mismatched carriers") {
  const Alphabet bits = numeric_alphabet(2);
  const Alphabet trits = numeric_alphabet(3);

  const CtcChannel id = make_ctc(bits, bits, {{1.0, 0.0}, {0.0, 1.0}});
  CHECK_THROWS_AS(apply_ctc(id, uniform_distribution(trits)), DimensionError);

  const CtqChannel encoder = make_ctq(bits, {basis_state(0, 2), basis_state(1, 2)});
  CHECK_THROWS_AS(apply_ctq(encoder, uniform_distribution(trits)), DimensionError);

  const DensityOperator qutrit = maximally_mixed({3});
  CHECK_THROWS_AS(qtc_distribution(z_povm(), qutrit), DimensionError);
  CHECK_THROWS_AS(qtc_sample(z_povm(), qutrit, 1), DimensionError);
  CHECK_THROWS_AS(apply_qtq(unitary_channel(pauli_x()), qutrit), DimensionError);
  CHECK_THROWS_AS(apply_instrument(instrument_from_povm(z_povm()), qutrit, 1),
                  DimensionError);
  CHECK_THROWS_AS(measurement_channel(z_povm(), qutrit), DimensionError);
}

TEST_CASE("qtq composition equals the composed Kraus family") {
  SplitMix64 rng(43);
  for (int rep = 0; rep < 10; ++rep) {
    const QtqChannel first = make_qtq(test::random_kraus(rng, 2, 2));
    const QtqChannel second = make_qtq(test::random_kraus(rng, 2, 3));
    const DensityOperator rho = test::random_density(rng, {2});
    const DensityOperator sequential = apply_qtq(second, apply_qtq(first, rho));
    const DensityOperator composed = apply_qtq(compose(second, first), rho);
    CHECK(max_abs_diff(sequential.matrix, composed.matrix) < tolerances().numeric);
  }
}
