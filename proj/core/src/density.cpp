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

#include "qagi/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qagi/eigen.hpp"
#include "qagi/error.hpp"

namespace qagi {

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;)
    strides[i - 1] = strides[i] * dims[i];
  return strides;
}

// Lexicographic order on (dims, entries), used to canonicalize the
// argument order of trace_distance so that it is symmetric bit-for-bit.
bool canonical_less(const DensityOperator& a, const DensityOperator& b) {
  if (a.dims != b.dims) return a.dims < b.dims;
  const auto& ea = a.matrix.entries();
  const auto& eb = b.matrix.entries();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].real() != eb[i].real()) return ea[i].real() < eb[i].real();
    if (ea[i].imag() != eb[i].imag()) return ea[i].imag() < eb[i].imag();
  }
  return ea.size() < eb.size();
}

}  // namespace

DensityCheck check_density(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                           const Tolerances& tol) {
  DensityCheck out;
  std::ostringstream detail;

  if (!m.is_square()) {
    out.violation = "shape";
    out.detail = "matrix is not square";
    return out;
  }
  if (dims.empty()) {
    out.violation = "dims";
    out.detail = "subsystem dimension list is empty";
    return out;
  }
  std::size_t product = 1;
  for (std::size_t d : dims) {
    if (d < 2) {
      out.violation = "dims";
      out.detail = "subsystem dimension < 2";
      return out;
    }
    product *= d;
  }
  if (product != m.rows()) {
    detail << "product of dims " << product << " != matrix size " << m.rows();
    out.violation = "dims";
    out.detail = detail.str();
    return out;
  }
  if (product > kMaxTotalDim) {
    detail << "total dimension " << product << " exceeds desk-scale cap " << kMaxTotalDim;
    out.violation = "dims";
    out.detail = detail.str();
    return out;
  }
  if (!m.is_finite()) {
    out.violation = "non-finite";
    out.detail = "matrix has NaN or infinite entries";
    return out;
  }
  const double herm = m.hermiticity_error();
  if (herm > tol.hermitian) {
    detail << "max |M - M^dag| = " << herm;
    out.violation = "non-hermitian";
    out.detail = detail.str();
    return out;
  }
  const double tr_err = std::abs(m.trace() - Complex{1.0, 0.0});
  if (tr_err > tol.trace) {
    detail << "|tr - 1| = " << tr_err;
    out.violation = "trace";
    out.detail = detail.str();
    return out;
  }
  const auto eigenvalues = hermitian_eigenvalues(m, tol);
  const double min_eig = eigenvalues.back();
  if (min_eig < -tol.psd) {
    detail << "minimum eigenvalue " << min_eig;
    out.violation = "negative-eigenvalue";
    out.detail = detail.str();
    return out;
  }

  out.ok = true;
  return out;
}

DensityOperator validate_density(const ComplexMatrix& m, std::vector<std::size_t> dims,
                                 const Tolerances& tol) {
  const DensityCheck check = check_density(m, dims, tol);
  if (!check.ok)
    throw ValidationError("invalid density operator (" + check.violation + "): " + check.detail);
  return DensityOperator{std::move(dims), m};
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::size_t>& keep) {
  const std::size_t n = rho.dims.size();
  if (keep.empty())
    throw DimensionError("partial_trace: keep set is empty");

  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.back() >= n)
    throw DimensionError("partial_trace: subsystem index out of range");

  std::vector<bool> is_kept(n, false);
  for (std::size_t k : kept) is_kept[k] = true;
  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_kept[i]) traced.push_back(i);

  const auto strides = strides_of(rho.dims);

  std::vector<std::size_t> kept_dims, traced_dims;
  for (std::size_t k : kept) kept_dims.push_back(rho.dims[k]);
  for (std::size_t t : traced) traced_dims.push_back(rho.dims[t]);

  std::size_t dk = 1, dt = 1;
  for (std::size_t d : kept_dims) dk *= d;
  for (std::size_t d : traced_dims) dt *= d;

  // Expand a flat index over a sub-dimension list into its contribution to
  // the full flat index.
  auto expand = [&](std::size_t flat, const std::vector<std::size_t>& subs,
                    const std::vector<std::size_t>& sub_dims) {
    std::size_t full = 0;
    for (std::size_t i = subs.size(); i-- > 0;) {
      full += (flat % sub_dims[i]) * strides[subs[i]];
      flat /= sub_dims[i];
    }
    return full;
  };

  ComplexMatrix out(dk, dk);
  for (std::size_t kr = 0; kr < dk; ++kr) {
    const std::size_t row_base = expand(kr, kept, kept_dims);
    for (std::size_t kc = 0; kc < dk; ++kc) {
      const std::size_t col_base = expand(kc, kept, kept_dims);
      Complex acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t off = expand(t, traced, traced_dims);
        acc += rho.matrix.at(row_base + off, col_base + off);
      }
      out.at(kr, kc) = acc;
    }
  }
  return DensityOperator{std::move(kept_dims), std::move(out)};
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim())
    throw DimensionError("trace_distance: total dimension mismatch");
  const DensityOperator& first = canonical_less(rho, sigma) ? rho : sigma;
  const DensityOperator& second = canonical_less(rho, sigma) ? sigma : rho;
  const ComplexMatrix diff = first.matrix - second.matrix;
  double sum = 0.0;
  for (double v : hermitian_eigenvalues(diff)) sum += std::abs(v);
  return 0.5 * sum;
}

DensityOperator pure_state(const std::vector<Complex>& amplitudes,
                           std::vector<std::size_t> dims) {
  const std::size_t d = amplitudes.size();
  ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      m.at(r, c) = amplitudes[r] * std::conj(amplitudes[c]);
  return validate_density(m, std::move(dims));
}

DensityOperator basis_state(std::size_t index, std::size_t dim) {
  if (index >= dim) throw DimensionError("basis_state: index out of range");
  ComplexMatrix m(dim, dim);
  m.at(index, index) = 1.0;
  return validate_density(m, {dim});
}

DensityOperator maximally_mixed(std::vector<std::size_t> dims) {
  std::size_t d = 1;
  for (std::size_t s : dims) d *= s;
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0 / static_cast<double>(d);
  return validate_density(m, std::move(dims));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  std::vector<std::size_t> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return DensityOperator{std::move(dims), kron(a.matrix, b.matrix)};
}

std::vector<Complex> ket_zero() { return {1.0, 0.0}; }
std::vector<Complex> ket_one() { return {0.0, 1.0}; }

std::vector<Complex> ket_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s};
}

std::vector<Complex> ket_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, -s};
}

std::vector<Complex> ket_bell_phi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, 0.0, 0.0, s};
}

std::vector<Complex> ket_singlet() {
  const double s = 1.0 / std::sqrt(2.0);
  return {0.0, s, -s, 0.0};
}

}  // namespace qagi
