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
#include <span>

namespace qagi {

/// SplitMix64: a counter-based 64-bit generator. Bit-identical output on
/// every platform, which is what makes seeded traces byte-reproducible.
/// Standard-library distributions are deliberately avoided for the same
/// reason (their output is implementation-defined).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Independent stream derived from (seed, stream_id). One scenario seed
  /// expands into per-step streams this way, so inserting a step does not
  /// reshuffle the randomness of later steps.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t stream_id) {
    SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (stream_id + 1)));
    return SplitMix64(mixer.next_u64());
  }

 private:
  std::uint64_t state_;
};

/// Draws an index from an unnormalized-but-near-1 probability vector by a
/// cumulative walk on a single uniform variate. Entries below `floor` are
/// treated as impossible and can never be selected.
std::size_t sample_index(std::span<const double> probs, double u, double floor);

}  // namespace qagi
