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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qagi/matrix.hpp"
#include "qagi/tolerances.hpp"

namespace qagi {

/// A system of rays (unit vectors) with declared orthonormal bases, used
/// to test non-contextual truth-value assignments.
struct RaySystem {
  std::size_t dimension = 0;  // >= 3
  std::vector<std::vector<Complex>> rays;
  std::vector<std::vector<std::size_t>> bases;  // index sets, each of size `dimension`
  std::string version;                          // data-asset version tag
};

/// Validates normalization and listed-basis orthonormality; throws
/// ValidationError on malformed input.
void validate_ray_system(const RaySystem& system, const Tolerances& tol = tolerances());

/// Result of the exhaustive assignment search. A satisfying assignment
/// gives each ray a value in {0, 1} such that every listed basis contains
/// exactly one 1 and no two orthogonal rays are both 1. UNSAT carries the
/// search certificate: how much of the space was covered.
struct KsSearchResult {
  bool satisfiable = false;
  std::vector<std::vector<int>> assignments;  // all satisfying assignments
  std::uint64_t nodes_searched = 0;
  std::size_t bases_checked = 0;
  std::size_t rays = 0;
};

/// Exhaustive depth-first search with constraint propagation over all
/// 0/1 assignments. Finds every satisfying assignment, or proves there is
/// none. An empty ray system is vacuously satisfiable.
KsSearchResult ks_assignment_search(const RaySystem& system,
                                    const Tolerances& tol = tolerances());

/// A single computational basis in dimension d (satisfiable, d assignments).
RaySystem single_basis_system(std::size_t d);

}  // namespace qagi
