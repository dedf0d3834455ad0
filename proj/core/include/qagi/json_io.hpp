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

#include <filesystem>
#include <string>

#include "qagi/channels.hpp"
#include "qagi/environment.hpp"
#include "qagi/jvalue.hpp"
#include "qagi/kochen_specker.hpp"
#include "qagi/qagi_agent.hpp"

namespace qagi {

// Shared project-wide file formats. Matrices are JSON objects
// {"rows": n, "cols": m, "entries": [[re, im], ...]} in row-major order;
// states additionally carry "dims": [d1, d2, ...]. Channels are tagged
// objects {"kind": "ctc"|"ctq"|"qtc"|"qtq"|"instrument", ...}. Malformed
// input raises ValidationError naming the offending field; missing files
// raise IoError.

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

ComplexMatrix parse_matrix_json(const std::string& text);
DensityOperator parse_state_json(const std::string& text);

CtcChannel parse_ctc_json(const std::string& text);
CtqChannel parse_ctq_json(const std::string& text);
Povm parse_povm_json(const std::string& text);
QtqChannel parse_qtq_json(const std::string& text);
Instrument parse_instrument_json(const std::string& text);

RaySystem parse_ray_system_json(const std::string& text);
RaySystem load_ray_system(const std::filesystem::path& path);

std::vector<EnvironmentModel> parse_environment_class_json(const std::string& text);
std::vector<EnvironmentModel> load_environment_class(const std::filesystem::path& path);

QagiAgent parse_agent_json(const std::string& text);
QagiAgent load_agent(const std::filesystem::path& path);

// Writers for embedding quantum objects in reports.
JValue matrix_to_jvalue(const ComplexMatrix& m);
JValue state_to_jvalue(const DensityOperator& rho);

}  // namespace qagi
