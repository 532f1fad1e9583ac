// Copyright 2026 The fswapnet developers
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

#include "fswapnet/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fswapnet {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CircuitWriter::CircuitWriter(std::ostream& out, int n_qubits, double dt) : out_(out) {
    out_ << "qubits " << n_qubits << "\n";
    out_ << "dt " << format_double(dt) << "\n";
}

void CircuitWriter::add(const GateOp& g) {
    if (g.term_id != cur_term_ || g.fswap_id != cur_fswap_) {
        out_ << "#layer " << layer_++ << "\n";
        if (g.fswap_id >= 0) {
            // an fswap group always starts with H(k); it swaps k, k+1
            out_ << "#fswap " << g.q0 << " " << g.q0 + 1 << "\n";
        } else if (g.term_id >= 0) {
            out_ << "#term " << g.term_id << "\n";
        }
        cur_term_ = g.term_id;
        cur_fswap_ = g.fswap_id;
    }
    switch (g.kind) {
        case GateKind::H: out_ << "H " << g.q0 << "\n"; break;
        case GateKind::Y: out_ << "Y " << g.q0 << "\n"; break;
        case GateKind::Rz: out_ << "RZ " << g.q0 << " " << format_double(g.angle) << "\n"; break;
        case GateKind::T: out_ << "T " << g.q0 << " " << format_double(g.angle) << "\n"; break;
        case GateKind::G: out_ << "G " << format_double(g.angle) << "\n"; break;
        case GateKind::Cnot: out_ << "CNOT " << g.q0 << " " << g.q1 << "\n"; break;
    }
}

void write_circuit(std::ostream& out, const CompiledCircuit& c) {
    CircuitWriter w(out, c.n_qubits, c.dt);
    for (const auto& g : c.gates) w.add(g);
}

ParsedCircuit read_circuit(const std::string& text) {
    ParsedCircuit pc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int cur_term = -1, cur_fswap = -1;
    int fswap_counter = -1;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "#term") {
            if (!(ls >> cur_term)) throw ParseError(lineno, "bad #term marker");
            cur_fswap = -1;
            continue;
        }
        if (tok == "#fswap") {
            int a, b;
            if (!(ls >> a >> b)) throw ParseError(lineno, "bad #fswap marker");
            cur_fswap = ++fswap_counter;
            cur_term = -1;
            continue;
        }
        if (tok[0] == '#') continue;  // #layer and free comments
        auto fail = [&] { throw ParseError(lineno, "malformed circuit line"); };
        if (tok == "qubits") {
            if (!(ls >> pc.n_qubits) || pc.n_qubits < 1) fail();
            have_header = true;
            continue;
        }
        if (tok == "dt") {
            if (!(ls >> pc.dt)) fail();
            continue;
        }
        if (!have_header) throw ParseError(lineno, "gate before qubits header");
        GateOp g;
        g.term_id = cur_term;
        g.fswap_id = cur_fswap;
        if (tok == "H" || tok == "Y") {
            g.kind = tok == "H" ? GateKind::H : GateKind::Y;
            if (!(ls >> g.q0)) fail();
        } else if (tok == "RZ" || tok == "T") {
            g.kind = tok == "RZ" ? GateKind::Rz : GateKind::T;
            if (!(ls >> g.q0 >> g.angle)) fail();
        } else if (tok == "G") {
            g.kind = GateKind::G;
            if (!(ls >> g.angle)) fail();
        } else if (tok == "CNOT") {
            g.kind = GateKind::Cnot;
            if (!(ls >> g.q0 >> g.q1)) fail();
        } else {
            throw ParseError(lineno, "unknown gate '" + tok + "'");
        }
        std::string extra;
        if (ls >> extra) fail();
        if (g.kind != GateKind::G &&
            (g.q0 < 0 || g.q0 >= pc.n_qubits ||
             (g.kind == GateKind::Cnot && (g.q1 < 0 || g.q1 >= pc.n_qubits))))
            throw ParseError(lineno, "qubit index out of range");
        pc.gates.push_back(g);
    }
    if (!have_header) throw ParseError(0, "missing qubits header");
    return pc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

namespace {

nlohmann::json cost_json(const GateCost& c) {
    return {{"one_qubit", c.one_qubit}, {"cnot", c.cnot}, {"sum", c.sum}};
}

}  // namespace

nlohmann::json report_to_json(const ResourceReport& r) {
    return {{"total", cost_json(r.total)},
            {"n_qubits", r.n_qubits},
            {"n_pairswap", r.n_pairswap},
            {"depth_serial_fswap", r.depth_serial_fswap},
            {"depth_parallel_fswap", r.depth_parallel_fswap},
            {"breakdown",
             {{"t", cost_json(r.class_t)},
              {"u", cost_json(r.class_u)},
              {"j", cost_json(r.class_j)},
              {"fswap", cost_json(r.class_fswap)}}}};
}

std::string estimate_to_csv(const EstimateTable& t) {
    std::ostringstream out;
    out << "metric";
    for (long long n : t.cells) out << ",cells_" << n;
    out << "\n";
    const Metric metrics[] = {Metric::OneQubit, Metric::Cnot, Metric::Sum};
    for (Metric m : metrics) {
        out << metric_name(m);
        for (const auto& r : t.reports) out << "," << metric_value(r.total, m);
        out << "\n";
    }
    out << "qubits";
    for (const auto& r : t.reports) out << "," << r.n_qubits;
    out << "\n";
    return out.str();
}

nlohmann::json estimate_to_json(const EstimateTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < t.cells.size(); ++i) {
        nlohmann::json row = report_to_json(t.reports[i]);
        row["n_cells"] = t.cells[i];
        rows.push_back(row);
    }
    nlohmann::json j = {{"n_qubits_per_cell", t.n_qubits_per_cell}, {"rows", rows}};
    if (!t.compound.empty()) j["compound"] = t.compound;
    return j;
}

}  // namespace fswapnet
