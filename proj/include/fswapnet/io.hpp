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

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fswapnet/compiler.hpp"
#include "fswapnet/resources.hpp"

namespace fswapnet {

// Number formatted with 17 significant digits (round-trips doubles exactly).
std::string format_double(double x);

// Streaming circuit-file writer.  Emits the header up front, then one line
// per gate with `#layer`, `#term`, `#fswap` markers at provenance boundaries.
// Usable as a CompileOptions::gate_sink for circuits too large to hold.
class CircuitWriter {
  public:
    CircuitWriter(std::ostream& out, int n_qubits, double dt);
    void add(const GateOp& g);

  private:
    std::ostream& out_;
    int layer_ = 0;
    int cur_term_ = -2;
    int cur_fswap_ = -2;
};

void write_circuit(std::ostream& out, const CompiledCircuit& c);

struct ParsedCircuit {
    int n_qubits = 0;
    double dt = 0.0;
    GateSequence gates;  // provenance restored from the `#term`/`#fswap` markers
};

ParsedCircuit read_circuit(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

nlohmann::json report_to_json(const ResourceReport& r);

// Per-cells estimate table mirroring the layout of a gate-count table:
// rows one_qubit / cnot / sum, one column per n_cells value.
struct EstimateTable {
    std::string compound;  // empty when given explicit per-cell data
    int n_qubits_per_cell = 0;
    std::vector<long long> cells;
    std::vector<ResourceReport> reports;  // one per cells entry
};

std::string estimate_to_csv(const EstimateTable& t);
nlohmann::json estimate_to_json(const EstimateTable& t);

}  // namespace fswapnet
