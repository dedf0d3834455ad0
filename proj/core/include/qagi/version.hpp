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

namespace qagi {

// Tool version, reported by the CLI and embedded in every report.
inline constexpr const char* kToolVersion = "0.1.0";

// Version of the report/trace file schema. Bumped whenever a field is
// added, removed or renamed.
inline constexpr const char* kSchemaVersion = "1";

}  // namespace qagi
