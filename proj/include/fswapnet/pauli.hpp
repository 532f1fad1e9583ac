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

#include <complex>
#include <map>

#include <Eigen/Dense>

#include "fswapnet/types.hpp"

namespace fswapnet {

using Complex = std::complex<double>;

// Dense matrices use qubit 0 as the leftmost (most significant) Kronecker
// factor throughout the library.
constexpr int kMaxDenseQubits = 14;

enum class PauliOp : char { X = 'X', Y = 'Y', Z = 'Z' };

struct PauliString {
    std::map<int, PauliOp> ops;  // qubit -> operator; identity sites omitted
    Complex coefficient{1.0, 0.0};
};

struct PauliSum {
    std::vector<PauliString> strings;  // like terms merged
};

PauliSum add(const PauliSum& a, const PauliSum& b);
PauliSum mul(const PauliSum& a, const PauliSum& b);
PauliSum scale(const PauliSum& a, Complex f);
PauliSum hermitian_conjugate(const PauliSum& a);

struct QubitLayout {
    std::vector<SpinOrbital> sequence;  // position -> spin-orbital

    // (1u, 1d, 2u, 2d, ...)
    static QubitLayout initial(int n_orbitals);

    int size() const { return static_cast<int>(sequence.size()); }
    int position_of(const SpinOrbital& so) const;  // throws Error if absent
    void swap_positions(int i);                    // exchange i and i+1
    // orbital sequence read off the even positions
    std::vector<int> orbital_sequence() const;
};

// JW ladder operator at the target's current position: Z-string on all
// positions strictly below, (X -+ iY)/2 at the target.
PauliSum jw_ladder(const SpinOrbital& target, const QubitLayout& layout, bool dagger);

// Unit-coefficient operator of a term kind at explicit physical positions.
// Role order: OnSiteEnergy {ps}; Hopping {ps,qs}; density kinds {a,b};
// 4-local exchange kinds {pu,pd,qu,qd}.
PauliSum term_operator(TermKind kind, const std::vector<int>& role_positions);

// Hermitian Pauli sum of the full term (h.c. included, coefficient included).
PauliSum term_to_pauli(const InteractionTerm& term, const QubitLayout& layout);

Eigen::MatrixXcd pauli_matrix(const PauliSum& ps, int n_qubits);

}  // namespace fswapnet
