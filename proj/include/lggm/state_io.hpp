// Copyright 2026 The lggm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "lggm/qstate.hpp"

namespace lggm {

/// Parses `{"n_qubits": N, "amplitudes": [[re, im], ...]}`. The amplitudes
/// are rescaled to unit norm. Throws InvalidArgument on malformed input.
PureState parse_state_json(const std::string &text);
PureState read_state_file(const std::string &path);

std::string state_to_json(const PureState &state);
void write_state_file(const PureState &state, const std::string &path);

}  // namespace lggm
