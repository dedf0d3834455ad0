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

#include <stdexcept>
#include <string>

namespace qagi {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape/index mismatch: wrong matrix dimensions, bad subsystem index,
/// alphabet mismatch.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A domain invariant is violated: non-Hermitian state, trace != 1,
/// non-stochastic kernel, non-CPTP Kraus family, malformed input file.
/// The message names the violated invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured resource budget would be exceeded (e.g. the expectimax
/// leaf count). Never silently truncated.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// File-system level failure: missing file, unwritable destination.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qagi
