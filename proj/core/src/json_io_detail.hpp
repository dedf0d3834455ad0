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

// Internal nlohmann-based converters shared by json_io.cpp and
// scenario.cpp. Not installed; the public API works on text and paths.

#pragma once

#include <json.hpp>

#include "qagi/channels.hpp"
#include "qagi/environment.hpp"
#include "qagi/kochen_specker.hpp"
#include "qagi/qagi_agent.hpp"

namespace qagi::detail {

using nlohmann::json;

json parse_text(const std::string& text, const char* what);

// Field accessors that raise ValidationError naming the field.
const json& require_field(const json& j, const char* field, const char* context);

ComplexMatrix matrix_from_json(const json& j);
DensityOperator state_from_json(const json& j);  // accepts named shortcuts too

Alphabet alphabet_from_json(const json& j, const char* context);

CtcChannel ctc_from_json(const json& j);
CtqChannel ctq_from_json(const json& j);
Povm povm_from_json(const json& j);
QtqChannel qtq_from_json(const json& j);
Instrument instrument_from_json(const json& j);

RaySystem ray_system_from_json(const json& j);
EnvironmentModel environment_from_json(const json& j);
std::vector<EnvironmentModel> environment_class_from_json(const json& j);
QagiAgent agent_from_json(const json& j);

}  // namespace qagi::detail
