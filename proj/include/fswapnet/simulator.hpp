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

#include "fswapnet/compiler.hpp"

namespace fswapnet {

constexpr int kMaxEquivalenceQubits = 12;

struct StateVector {
    int n_qubits = 0;
    Eigen::VectorXcd amps;

    static StateVector basis(int n_qubits, long long index);
};

// Single gate applied to an amplitude vector (qubit 0 = most significant bit).
void apply_gate(Eigen::VectorXcd& amps, int n_qubits, const GateOp& g);

StateVector apply_circuit(StateVector psi, const GateSequence& gates);

// Dense unitary of a gate sequence via statevector kernels (columns of I).
Eigen::MatrixXcd circuit_unitary(const GateSequence& gates, int n_qubits);

inline Eigen::MatrixXcd circuit_unitary(const CompiledCircuit& c) {
    return circuit_unitary(c.gates, c.n_qubits);
}

// exp(-i scale H) for Hermitian H, by eigendecomposition.
Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double scale);

// exp(A) by Taylor series with scaling and squaring (independent cross-check).
Eigen::MatrixXcd expm_taylor(const Eigen::MatrixXcd& a);

// exp(-i h dt) with h = pauli_matrix(term_to_pauli(term, layout)), evaluated
// exactly through the term's mutually commuting Pauli strings.
Eigen::MatrixXcd exact_term_exponential(const InteractionTerm& term,
                                        const QubitLayout& layout, double dt);

// R * product of term exponentials in trace order, all in initial-layout
// labels; R = ordered product of the trace's fswap matrices.  This is the
// exact unitary the compiled circuit must equal.
Eigen::MatrixXcd reference_unitary(const ExecutionTrace& trace,
                                   const EffectiveHamiltonian& h, double dt);

// Product of the trace's fswap matrices alone (the layout-reversal unitary).
Eigen::MatrixXcd fswap_product(const ExecutionTrace& trace, int n_qubits);

struct Equivalence {
    double distance = 0.0;                // ||A - B||
    double phase_aligned_distance = 0.0;  // min_phi ||A - e^{i phi} B||
    double phase = 0.0;
    const char* norm = "frobenius";       // "spectral" for <= 8 qubits
};

Equivalence equivalence_check(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace fswapnet
