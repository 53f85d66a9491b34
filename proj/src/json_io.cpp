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

#include "analogsim/json_io.hpp"

#include <cmath>
#include <sstream>

namespace analogsim {

namespace {

std::vector<int> support_from_json(const json& j) {
    if (!j.contains("support") || !j["support"].is_array()) {
        throw ConfigError("channel spec: missing \"support\" array");
    }
    return j["support"].get<std::vector<int>>();
}

std::string bits_to_text(std::uint64_t bits, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((bits >> q) & 1) out[static_cast<std::size_t>(q)] = '1';
    }
    return out;
}

std::uint64_t text_to_bits(const std::string& text, int n) {
    if (static_cast<int>(text.size()) != n) {
        throw ConfigError("initial bitstring length does not match num_qubits");
    }
    std::uint64_t bits = 0;
    for (int q = 0; q < n; ++q) {
        const char c = text[static_cast<std::size_t>(q)];
        if (c == '1')
            bits |= 1ULL << q;
        else if (c != '0')
            throw ConfigError("initial bitstring must be over {0,1}");
    }
    return bits;
}

}  // namespace

json channel_to_json(const NoiseChannel& channel) {
    json j;
    j["support"] = channel.support;
    if (const auto* pc = std::get_if<PauliChannelSpec>(&channel.spec)) {
        j["type"] = "pauli";
        json probs = json::object();
        for (const auto& [s, p] : pc->probs) probs[s.text()] = p;
        j["probabilities"] = std::move(probs);
    } else if (const auto* dp = std::get_if<DepolarizingSpec>(&channel.spec)) {
        j["type"] = "depolarizing";
        j["epsilon"] = dp->epsilon;
    } else if (const auto* co = std::get_if<CoherentSpec>(&channel.spec)) {
        j["type"] = "coherent";
        j["axis"] = co->axis.text();
        j["alpha"] = co->alpha;
        j["q"] = co->q;
    } else {
        const auto& ad = std::get<AmplitudeDampingSpec>(channel.spec);
        j["type"] = "amplitude_damping";
        j["gamma"] = ad.gamma;
    }
    return j;
}

NoiseChannel channel_from_json(const json& j) {
    const std::string type = j.value("type", "");
    std::vector<int> support = support_from_json(j);
    if (type == "pauli") {
        if (!j.contains("probabilities")) {
            throw ConfigError("pauli channel: missing \"probabilities\"");
        }
        PauliProbabilities probs;
        for (const auto& [key, value] : j["probabilities"].items()) {
            probs[PauliString::from_text(key)] = value.get<double>();
        }
        return NoiseChannel::pauli(std::move(probs), std::move(support));
    }
    if (type == "depolarizing") {
        if (!j.contains("epsilon")) {
            throw ConfigError("depolarizing channel: missing \"epsilon\"");
        }
        return NoiseChannel::depolarizing(j["epsilon"].get<double>(),
                                          std::move(support));
    }
    if (type == "coherent") {
        return NoiseChannel::coherent(
            PauliString::from_text(j.value("axis", "X")),
            j.value("alpha", 0.0), j.value("q", 0.0), std::move(support));
    }
    if (type == "amplitude_damping") {
        if (!j.contains("gamma")) {
            throw ConfigError("amplitude_damping channel: missing \"gamma\"");
        }
        return NoiseChannel::amplitude_damping(j["gamma"].get<double>(),
                                               std::move(support));
    }
    throw ConfigError("channel spec: unknown type '" + type + "'");
}

json observable_to_json(const Observable& obs) {
    json j;
    j["name"] = obs.name();
    if (obs.kind() == Observable::Kind::diagonal_projector) {
        j["kind"] = "diagonal_projector";
        j["sector"] = obs.sector();
        return j;
    }
    j["kind"] = "pauli_sum";
    json terms = json::array();
    for (const Observable::Term& t : obs.terms()) {
        terms.push_back({{"coeff", t.coeff},
                         {"pauli", t.pauli.text()},
                         {"qubits", t.qubits}});
    }
    j["terms"] = std::move(terms);
    return j;
}

Observable observable_from_json(const json& j) {
    const std::string kind = j.value("kind", "pauli_sum");
    const std::string name = j.value("name", "obs");
    if (kind == "diagonal_projector") {
        if (!j.contains("sector")) {
            throw ConfigError("projector observable: missing \"sector\"");
        }
        return Observable::diagonal_projector(name, j["sector"].get<int>());
    }
    if (kind != "pauli_sum") {
        throw ConfigError("observable: unknown kind '" + kind + "'");
    }
    std::vector<Observable::Term> terms;
    for (const json& tj : j.value("terms", json::array())) {
        terms.push_back({tj.at("coeff").get<double>(),
                         PauliString::from_text(tj.at("pauli").get<std::string>()),
                         tj.at("qubits").get<std::vector<int>>()});
    }
    return Observable::pauli_sum(name, std::move(terms));
}

json circuit_to_json(const NoisyCircuit& circuit) {
    json j;
    j["num_qubits"] = circuit.num_qubits;
    j["initial"] = circuit.initial_plus
                       ? "+"
                       : bits_to_text(circuit.initial_bits, circuit.num_qubits);
    json ops = json::array();
    for (const CircuitOp& op : circuit.ops) {
        json oj;
        oj["gate"] = gate_kind_name(op.gate.kind);
        oj["qubits"] = std::vector<int>(
            op.gate.qubits.begin(),
            op.gate.qubits.begin() + gate_arity(op.gate.kind));
        oj["angle"] = op.gate.angle;
        oj["noise"] = op.noise ? channel_to_json(*op.noise) : json(nullptr);
        ops.push_back(std::move(oj));
    }
    j["ops"] = std::move(ops);
    j["record_points"] = circuit.record_points;
    json observables = json::array();
    for (const Observable& obs : circuit.observables) {
        observables.push_back(observable_to_json(obs));
    }
    j["observables"] = std::move(observables);
    j["record_entropy"] = circuit.record_entropy;
    j["entropy_cut"] = circuit.entropy_cut;
    j["record_distribution"] = circuit.record_distribution;
    return j;
}

NoisyCircuit circuit_from_json(const json& j) {
    NoisyCircuit c;
    if (!j.contains("num_qubits") || !j.contains("ops")) {
        throw ConfigError("circuit: need \"num_qubits\" and \"ops\"");
    }
    c.num_qubits = j["num_qubits"].get<int>();
    const std::string initial = j.value("initial", std::string("0"));
    if (initial == "+") {
        c.initial_plus = true;
    } else {
        c.initial_bits = text_to_bits(
            initial == "0" ? std::string(static_cast<std::size_t>(c.num_qubits), '0')
                           : initial,
            c.num_qubits);
    }
    for (const json& oj : j["ops"]) {
        CircuitOp op;
        op.gate.kind = parse_gate_kind(oj.at("gate").get<std::string>());
        const auto qubits = oj.at("qubits").get<std::vector<int>>();
        if (static_cast<int>(qubits.size()) != gate_arity(op.gate.kind)) {
            throw ConfigError("circuit op: qubit count does not match gate");
        }
        op.gate.qubits = {qubits[0], qubits.size() > 1 ? qubits[1] : 0};
        op.gate.angle = oj.value("angle", 0.0);
        if (oj.contains("noise") && !oj["noise"].is_null()) {
            op.noise = channel_from_json(oj["noise"]);
        }
        c.ops.push_back(std::move(op));
    }
    if (j.contains("record_points")) {
        c.record_points = j["record_points"].get<std::vector<std::size_t>>();
    } else {
        c.record_points = {c.ops.size()};
    }
    for (const json& obsj : j.value("observables", json::array())) {
        c.observables.push_back(observable_from_json(obsj));
    }
    c.record_entropy = j.value("record_entropy", false);
    c.entropy_cut = j.value("entropy_cut", c.num_qubits / 2);
    c.record_distribution = j.value("record_distribution", false);
    return c;
}

json factorization_to_json(const FactorizedChannel& fc, double residual) {
    json j;
    json q = json::object();
    for (const auto& [s, v] : fc.factors) q[s.text()] = v;
    j["q"] = std::move(q);
    j["all_physical"] = fc.all_physical;
    j["residual"] = residual;
    json src = json::object();
    for (const auto& [s, v] : fc.source) src[s.text()] = v;
    j["source"] = std::move(src);
    return j;
}

json closed_form_report_to_json(const ClosedFormReport& report) {
    json j;
    j["kind"] = angle_kind_name(report.kind);
    j["has_printed_form"] = report.has_printed_form;
    if (report.has_printed_form && std::isfinite(report.printed_scale)) {
        j["printed_scale"] = report.printed_scale;
    }
    j["printed_ok"] = report.printed_ok;
    j["adopted_scale"] = report.adopted_scale;
    j["adopted_residual"] = report.adopted_residual;
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

json report_to_json(const TrajectoryReport& report) {
    json j;
    j["method"] = report.method;
    j["master_seed"] = report.master_seed;
    j["trajectories_run"] = report.trajectories_run;
    j["stop_reason"] = report.stop_reason;
    json series = json::array();
    for (std::size_t r = 0; r < report.n_records(); ++r) {
        for (std::size_t s = 0; s < report.n_series(); ++s) {
            const SeriesStats st = report.stats(r, s);
            series.push_back({{"record_point", report.record_points[r]},
                              {"observable", report.series_names[s]},
                              {"mean", st.mean},
                              {"variance", st.variance},
                              {"sem", st.sem},
                              {"n", report.trajectories_run}});
        }
    }
    j["series"] = std::move(series);
    return j;
}

std::string report_raw_csv(const TrajectoryReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "trajectory_index,record_point,observable_name,value\n";
    for (std::size_t t = 0; t < report.trajectories_run; ++t) {
        for (std::size_t r = 0; r < report.n_records(); ++r) {
            for (std::size_t s = 0; s < report.n_series(); ++s) {
                out << t << ',' << report.record_points[r] << ','
                    << report.series_names[s] << ',' << report.value(t, r, s)
                    << '\n';
            }
        }
    }
    return out.str();
}

std::string report_summary_csv(const TrajectoryReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "record_point,observable_name,mean,variance,sem,n\n";
    for (std::size_t r = 0; r < report.n_records(); ++r) {
        for (std::size_t s = 0; s < report.n_series(); ++s) {
            const SeriesStats st = report.stats(r, s);
            out << report.record_points[r] << ',' << report.series_names[s]
                << ',' << st.mean << ',' << st.variance << ',' << st.sem << ','
                << report.trajectories_run << '\n';
        }
    }
    return out.str();
}

}  // namespace analogsim
