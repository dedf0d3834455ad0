#include <doctest.h>

#include <cmath>

#include "qagi/density.hpp"
#include "qagi/eigen.hpp"
#include "qagi/error.hpp"
#include "qagi/matrix.hpp"
#include "test_helpers.hpp"

using namespace qagi;

TEST_CASE("kron: identity, diagonal and projector cases") {
  CHECK(approx_equal(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                     ComplexMatrix::identity(4), 0.0));

  const ComplexMatrix zz = kron(pauli_z(), pauli_z());
  for (std::size_t i = 0; i < 4; ++i) {
    const double expected = (i == 0 || i == 3) ? 1.0 : -1.0;
    CHECK(zz.at(i, i) == Complex(expected, 0.0));
  }

  const DensityOperator p0 = basis_state(0, 2);
  const DensityOperator p1 = basis_state(1, 2);
  const ComplexMatrix proj = kron(p0.matrix, p1.matrix);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      CHECK(proj.at(r, c) == Complex(r == 1 && c == 1 ? 1.0 : 0.0, 0.0));
}

TEST_CASE("kron trace is multiplicative") {
  SplitMix64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = test::random_matrix(rng, 3, 3);
    const ComplexMatrix b = test::random_matrix(rng, 2, 2);
    const Complex lhs = kron(a, b).trace();
    const Complex rhs = a.trace() * b.trace();
    CHECK(std::abs(lhs - rhs) < tolerances().numeric);
  }
}

TEST_CASE("partial_trace: product factorization and Bell marginal") {
  SplitMix64 rng(7);
  const DensityOperator rho = test::random_density(rng, {2});
  const DensityOperator sigma = test::random_density(rng, {3});
  const DensityOperator joint = tensor(rho, sigma);

  const DensityOperator left = partial_trace(joint, {0});
  CHECK(max_abs_diff(left.matrix, rho.matrix) < tolerances().numeric);
  const DensityOperator right = partial_trace(joint, {1});
  CHECK(max_abs_diff(right.matrix, sigma.matrix) < tolerances().numeric);

  const DensityOperator bell = pure_state(ket_bell_phi_plus(), {2, 2});
  const DensityOperator marginal = partial_trace(bell, {0});
  CHECK(max_abs_diff(marginal.matrix, maximally_mixed({2}).matrix) < tolerances().numeric);
}

TEST_CASE("partial_trace: bad index and trace preservation") {
  const DensityOperator rho = basis_state(0, 2);
  CHECK_THROWS_AS(partial_trace(rho, {2}), DimensionError);
  CHECK_THROWS_AS(partial_trace(rho, {}), DimensionError);

  SplitMix64 rng(13);
  const DensityOperator joint = test::random_density(rng, {2, 2, 2});
  for (const std::vector<std::size_t>& keep :
       {std::vector<std::size_t>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}) {
    const DensityOperator reduced = partial_trace(joint, keep);
    CHECK(std::abs(reduced.matrix.trace() - Complex(1.0, 0.0)) < tolerances().trace);
  }
}

TEST_CASE("partial_trace composes: trace out one subsystem at a time") {
  SplitMix64 rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityOperator joint = test::random_density(rng, {2, 2, 2});
    // Keep {0,2}, then keep {0} of the result == keep {0} directly.
    const DensityOperator two_step = partial_trace(partial_trace(joint, {0, 2}), {0});
    const DensityOperator one_step = partial_trace(joint, {0});
    CHECK(max_abs_diff(two_step.matrix, one_step.matrix) < tolerances().numeric);
  }
}

TEST_CASE("hermitian_eigen: Pauli spectra and error paths") {
  const auto z = hermitian_eigen(pauli_z());
  CHECK(z.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(z.values[1] == doctest::Approx(-1.0).epsilon(1e-12));

  const auto x = hermitian_eigen(pauli_x());
  CHECK(x.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x.values[1] == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), ValidationError);
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix(2, 3)), ValidationError);
  ComplexMatrix nan_matrix = pauli_z();
  nan_matrix.at(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(hermitian_eigen(nan_matrix), ValidationError);
}

TEST_CASE("hermitian_eigen reconstructs the input") {
  SplitMix64 rng(19);
  for (int rep = 0; rep < 10; ++rep) {
    ComplexMatrix g = test::random_matrix(rng, 5, 5);
    ComplexMatrix h = g + g.adjoint();  // Hermitian
    const EigenDecomposition eig = hermitian_eigen(h);
    // V diag(lambda) V^dag
    ComplexMatrix reconstructed(5, 5);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < 5; ++k)
          acc += eig.vectors.at(r, k) * eig.values[k] * std::conj(eig.vectors.at(c, k));
        reconstructed.at(r, c) = acc;
      }
    CHECK(max_abs_diff(reconstructed, h) < tolerances().eigen);
    for (std::size_t k = 1; k < eig.values.size(); ++k)
      CHECK(eig.values[k - 1] >= eig.values[k]);
  }
}

TEST_CASE("trace_distance: frozen values") {
  const DensityOperator zero = basis_state(0, 2);
  const DensityOperator one = basis_state(1, 2);
  const DensityOperator plus = pure_state(ket_plus(), {2});

  CHECK(trace_distance(zero, zero) == 0.0);
  CHECK(trace_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-12));
  // Eigenvalues of |0><0| - |+><+| are +-sqrt(1/2).
  CHECK(trace_distance(zero, plus) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("trace_distance is a metric on sampled pairs") {
  SplitMix64 rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityOperator a = test::random_density(rng, {2, 2});
    const DensityOperator b = test::random_density(rng, {2, 2});
    const DensityOperator c = test::random_density(rng, {2, 2});
    const double ab = trace_distance(a, b);
    const double ba = trace_distance(b, a);
    CHECK(ab == ba);  // exact symmetry via canonical ordering
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0 + tolerances().numeric);
    CHECK(trace_distance(a, c) <= ab + trace_distance(b, c) + tolerances().numeric);
  }
  CHECK_THROWS_AS(trace_distance(basis_state(0, 2), basis_state(0, 3)), DimensionError);
}

TEST_CASE("validate_density: accepted and rejected inputs") {
  // |+><+|
  const ComplexMatrix plus{{0.5, 0.5}, {0.5, 0.5}};
  CHECK(validate_density(plus, {2}).dim() == 2);

  // trace 1 but indefinite
  const ComplexMatrix indefinite{{1.1, 0.0}, {0.0, -0.1}};
  CHECK_THROWS_WITH_AS(validate_density(indefinite, {2}),
                       doctest::Contains("negative-eigenvalue"), ValidationError);

  // maximally mixed
  const ComplexMatrix mixed{{0.5, 0.0}, {0.0, 0.5}};
  CHECK(validate_density(mixed, {2}).dims == std::vector<std::size_t>{2});

  const ComplexMatrix non_hermitian{{0.5, 0.3}, {0.1, 0.5}};
  CHECK_THROWS_WITH_AS(validate_density(non_hermitian, {2}),
                       doctest::Contains("non-hermitian"), ValidationError);

  const ComplexMatrix wrong_trace{{0.7, 0.0}, {0.0, 0.7}};
  CHECK_THROWS_WITH_AS(validate_density(wrong_trace, {2}), doctest::Contains("trace"),
                       ValidationError);

  CHECK_THROWS_AS(validate_density(mixed, {3}), ValidationError);
  CHECK_THROWS_AS(validate_density(mixed, {}), ValidationError);
}

TEST_CASE("density eigenvalues sum to 1 and stay nonnegative") {
  SplitMix64 rng(29);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityOperator rho = test::random_density(rng, {2, 2});
    const auto eigenvalues = hermitian_eigenvalues(rho.matrix);
    double sum = 0.0;
    for (double v : eigenvalues) {
      CHECK(v >= -tolerances().psd);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("desk-scale dimension cap") {
  CHECK_THROWS_AS(maximally_mixed({2, 2, 2, 2, 2, 2, 2}), ValidationError);
}
