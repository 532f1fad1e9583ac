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

#include <Eigen/Dense>

#include "fswapnet/pauli.hpp"
#include "fswapnet/types.hpp"

namespace fswapnet {

// Gate set: H, Y = (Pauli-Y + Pauli-Z)/sqrt(2) (self-inverse basis change
// mapping Y <-> Z), Rz(theta) = exp(-i theta Z / 2), phase gate
// T(theta) = diag(1, exp(-i theta)), global phase G(theta) = exp(-i theta) I,
// and nearest-neighbor CNOT.
enum class GateKind { H, Y, Rz, T, G, Cnot };

struct GateOp {
    GateKind kind = GateKind::H;
    int q0 = -1;          // target (single-qubit) or control (CNOT); -1 for G
    int q1 = -1;          // CNOT target
    double angle = 0.0;   // Rz / T / G
    int term_id = -1;     // provenance
    int fswap_id = -1;

    bool is_cnot() const { return kind == GateKind::Cnot; }
};

using GateSequence = std::vector<GateOp>;

struct GateCost {
    long long one_qubit = 0;
    long long cnot = 0;
    long long sum = 0;
};

// Table II row for a term kind.
GateCost gate_cost(TermKind kind);

constexpr GateCost kFswapCost{2, 2, 4};

GateCost count_gates(const GateSequence& seq);

// Gate sequence implementing exp(-i theta h) for the JW term operator h at
// the given role positions (which must form a contiguous physical window).
// theta = coefficient * dt.  Counts match gate_cost(kind) exactly.
GateSequence decompose_term(TermKind kind, double theta,
                            const std::vector<int>& role_positions);

// Convenience overload: roles laid out contiguously from window_start.
GateSequence decompose_term(TermKind kind, double theta, int window_start);

// fswap between neighbors k, k+1: H(k), CNOT(k,k+1), CNOT(k+1,k), H(k+1).
GateSequence fswap_gate(int k);

// 4x4 fswap matrix: |00>->|00>, |01><->|10>, |11>->-|11>.
Eigen::Matrix4cd fswap_matrix();

// Dense product of the gate matrices, in sequence order (small windows only).
Eigen::MatrixXcd unitary_of(const GateSequence& seq, int n_qubits);

}  // namespace fswapnet
