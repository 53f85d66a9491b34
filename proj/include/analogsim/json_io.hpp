// Copyright 2026 The analogsim authors
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

#include <string>

#include <json.hpp>

#include "analogsim/angles.hpp"
#include "analogsim/circuits.hpp"
#include "analogsim/factorization.hpp"
#include "analogsim/harness.hpp"

namespace analogsim {

using json = nlohmann::json;

// Channel spec: {"type": "pauli"|"depolarizing"|"coherent"|
// "amplitude_damping", "support": [q...], parameters...}. Pauli strings use
// the text form with qubit 0 leftmost.
json channel_to_json(const NoiseChannel& channel);
NoiseChannel channel_from_json(const json& j);

json observable_to_json(const Observable& obs);
Observable observable_from_json(const json& j);

// Circuit schema: {"num_qubits": N, "initial": "+"|bitstring, "ops":
// [{"gate", "qubits", "angle", "noise"}], optional "record_points",
// "observables", "record_entropy", "entropy_cut", "record_distribution"}.
json circuit_to_json(const NoisyCircuit& circuit);
NoisyCircuit circuit_from_json(const json& j);

json factorization_to_json(const FactorizedChannel& fc, double residual);

json closed_form_report_to_json(const ClosedFormReport& report);

json report_to_json(const TrajectoryReport& report);
std::string report_raw_csv(const TrajectoryReport& report);
std::string report_summary_csv(const TrajectoryReport& report);

}  // namespace analogsim
