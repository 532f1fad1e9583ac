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

#include <functional>
#include <set>
#include <variant>

#include "fswapnet/gate_decomp.hpp"
#include "fswapnet/pauli.hpp"
#include "fswapnet/types.hpp"

namespace fswapnet {

struct TermExecution {
    int term_id = -1;
    std::vector<int> role_positions;  // physical qubits, decomposition role order
    int window_start = 0;
    int window_size = 0;
    int scan_block = 0;               // which executability scan emitted it
    std::vector<SpinOrbital> layout;  // snapshot at execution (optional)
};

struct FswapApplication {
    int position = 0;  // swaps position, position+1
    int fswap_id = -1;
    int step = 0;      // transposition round (1-based)
    int sub = 0;       // sub-step within the pair swap: 0, 1, 2
    std::vector<SpinOrbital> layout;  // snapshot before the swap (optional)
};

struct StepMarker {
    int step = 0;
    bool odd = false;
};

using TraceEvent = std::variant<TermExecution, FswapApplication, StepMarker>;

struct ExecutionTrace {
    std::vector<TraceEvent> events;
};

struct CompiledCircuit {
    GateSequence gates;  // empty when compiled in counts-only mode
    ExecutionTrace trace;
    QubitLayout final_layout;
    int n_qubits = 0;
    double dt = 0.0;
    long long n_pairswap = 0;
    long long n_fswap = 0;
    long long depth_serial = 0;    // serial fswap operation count
    long long depth_parallel = 0;  // measured parallel fswap layer count
    GateCost totals;               // counts including counts-only mode
};

struct CompileOptions {
    bool emit_gates = true;
    bool record_layouts = true;
    bool record_trace = true;
    // When set, emitted gates are forwarded here instead of being stored in
    // CompiledCircuit::gates (streaming mode for large circuits).
    std::function<void(const GateOp&)> gate_sink;
};

// Algorithm 1: odd/even transposition rounds of pair swaps until the orbital
// sequence is reversed, executing every interaction operator exactly once.
CompiledCircuit compile_trotter_step(const EffectiveHamiltonian& h, double dt,
                                     const CompileOptions& options = {});

// Pending terms currently executable, ordered by (lowest physical position,
// kind rank, term id).
std::vector<int> executable_terms(const QubitLayout& layout, const EffectiveHamiltonian& h,
                                  const std::set<int>& pending);

struct CoverageReport {
    bool each_term_once = false;
    bool reversed = false;
    bool fswap_count_ok = false;
    long long n_fswap_expected = 0;
    long long n_fswap_actual = 0;
    std::vector<int> missing;
    std::vector<int> duplicated;

    bool ok() const { return each_term_once && reversed && fswap_count_ok; }
};

CoverageReport verify_coverage(const ExecutionTrace& trace, const EffectiveHamiltonian& h);

struct Layer {
    bool is_fswap = false;
    std::vector<size_t> events;  // indices into the trace's event list
};

struct LayeredCircuit {
    std::vector<Layer> layers;
    long long fswap_layers = 0;
    long long interaction_layers = 0;
};

// Operation-level layering: fswaps grouped by network sub-step (three fswap
// layers per transposition round), interaction terms greedily packed within
// each scan block.
LayeredCircuit schedule_parallel(const CompiledCircuit& c);

}  // namespace fswapnet
