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

#include "lggm/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lggm/error.hpp"

namespace lggm {

PureState parse_state_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidArgument(std::string("state JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("amplitudes")) {
        throw InvalidArgument("state JSON needs \"n_qubits\" and \"amplitudes\"");
    }
    if (!doc["n_qubits"].is_number_integer()) {
        throw InvalidArgument("state JSON: n_qubits must be an integer");
    }
    const int n = doc["n_qubits"].get<int>();
    check_dimension(n);
    const auto &arr = doc["amplitudes"];
    if (!arr.is_array()) {
        throw InvalidArgument("state JSON: amplitudes must be an array");
    }
    Amplitudes amps;
    amps.reserve(arr.size());
    for (const auto &entry : arr) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
            throw InvalidArgument("state JSON: each amplitude must be [re, im]");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return PureState::normalized(n, std::move(amps));
}

PureState read_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open state file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

std::string state_to_json(const PureState &state) {
    nlohmann::json doc;
    doc["n_qubits"] = state.n_qubits();
    auto arr = nlohmann::json::array();
    for (const auto &c : state.amplitudes()) {
        arr.push_back({c.real(), c.imag()});
    }
    doc["amplitudes"] = std::move(arr);
    return doc.dump();
}

void write_state_file(const PureState &state, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write state file " + path);
    }
    out << state_to_json(state) << "\n";
}

}  // namespace lggm
