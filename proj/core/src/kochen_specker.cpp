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

#include "qagi/kochen_specker.hpp"

#include <cmath>
#include <sstream>

#include "qagi/error.hpp"

namespace qagi {

namespace {

Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

// Exhaustive DFS over ray values with propagation: a ray set to 1 rules
// out 1 on everything orthogonal to it, and a basis that can no longer
// reach exactly one 1 prunes the whole subtree.
class AssignmentSearch {
 public:
  AssignmentSearch(const RaySystem& system, double ortho_tol) : system_(system) {
    const std::size_t n = system.rays.size();
    orthogonal_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(inner(system.rays[i], system.rays[j])) <= ortho_tol) {
          orthogonal_[i].push_back(j);
          orthogonal_[j].push_back(i);
        }
  }

  KsSearchResult run() {
    KsSearchResult result;
    result.rays = system_.rays.size();
    result.bases_checked = system_.bases.size();
    values_.assign(system_.rays.size(), -1);  // -1 = unassigned
    search(0, result);
    result.satisfiable = !result.assignments.empty();
    return result;
  }

 private:
  bool consistent(std::size_t ray) const {
    if (values_[ray] == 1) {
      for (std::size_t other : orthogonal_[ray])
        if (values_[other] == 1) return false;
    }
    // A fully assigned basis must contain exactly one 1; a partially
    // assigned one must still be able to reach exactly one.
    for (const auto& basis : system_.bases) {
      int ones = 0;
      int unassigned = 0;
      bool touches = false;
      for (std::size_t idx : basis) {
        touches = touches || idx == ray;
        if (values_[idx] == 1) ++ones;
        if (values_[idx] == -1) ++unassigned;
      }
      if (!touches) continue;
      if (ones > 1) return false;
      if (ones == 0 && unassigned == 0) return false;
    }
    return true;
  }

  void search(std::size_t ray, KsSearchResult& result) {
    if (ray == values_.size()) {
      // Full assignment; every constraint was maintained incrementally.
      result.assignments.emplace_back(values_.begin(), values_.end());
      return;
    }
    for (int value : {0, 1}) {
      values_[ray] = value;
      ++result.nodes_searched;
      if (consistent(ray)) search(ray + 1, result);
    }
    values_[ray] = -1;
  }

  const RaySystem& system_;
  std::vector<std::vector<std::size_t>> orthogonal_;
  std::vector<int> values_;
};

}  // namespace

void validate_ray_system(const RaySystem& system, const Tolerances& tol) {
  if (system.rays.empty() && system.bases.empty()) return;  // vacuous system
  if (system.dimension < 3)
    throw ValidationError("ray system: dimension must be at least 3");
  for (const auto& ray : system.rays) {
    if (ray.size() != system.dimension)
      throw ValidationError("ray system: ray length != declared dimension");
    const double norm = std::sqrt(inner(ray, ray).real());
    if (std::abs(norm - 1.0) > tol.numeric)
      throw ValidationError("ray system: ray is not normalized");
  }
  for (std::size_t b = 0; b < system.bases.size(); ++b) {
    const auto& basis = system.bases[b];
    if (basis.size() != system.dimension) {
      std::ostringstream msg;
      msg << "ray system: basis " << b << " has " << basis.size()
          << " rays, expected " << system.dimension;
      throw ValidationError(msg.str());
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] >= system.rays.size())
        throw ValidationError("ray system: basis references unknown ray");
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        const double overlap =
            std::abs(inner(system.rays[basis[i]], system.rays[basis[j]]));
        if (overlap > tol.numeric) {
          std::ostringstream msg;
          msg << "ray system: basis " << b << " is not orthonormal (|<" << basis[i]
              << "|" << basis[j] << ">| = " << overlap << ")";
          throw ValidationError(msg.str());
        }
      }
    }
  }
}

KsSearchResult ks_assignment_search(const RaySystem& system, const Tolerances& tol) {
  validate_ray_system(system, tol);
  if (system.rays.empty()) {
    // No rays, no constraints: the empty assignment satisfies vacuously.
    KsSearchResult result;
    result.satisfiable = true;
    result.assignments.push_back({});
    result.nodes_searched = 1;
    return result;
  }
  AssignmentSearch search(system, tol.numeric);
  return search.run();
}

RaySystem single_basis_system(std::size_t d) {
  RaySystem system;
  system.dimension = d;
  system.version = "generated";
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Complex> ray(d, 0.0);
    ray[i] = 1.0;
    system.rays.push_back(std::move(ray));
    basis.push_back(i);
  }
  system.bases.push_back(std::move(basis));
  return system;
}

}  // namespace qagi
