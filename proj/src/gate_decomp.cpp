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

#include "fswapnet/gate_decomp.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace fswapnet {

GateCost gate_cost(TermKind kind) {
    switch (kind) {
        case TermKind::OnSiteEnergy: return {1, 0, 1};
        case TermKind::Hopping: return {10, 4, 14};
        case TermKind::CoulombOnSite:
        case TermKind::CoulombOffSite:
        case TermKind::ExchangeDensity: return {4, 2, 6};
        case TermKind::ExchangeSpinFlip:
        case TermKind::ExchangePairHop: return {72, 48, 120};
    }
    return {};
}

GateCost count_gates(const GateSequence& seq) {
    GateCost c;
    for (const auto& g : seq)
        g.is_cnot() ? ++c.cnot : ++c.one_qubit;
    c.sum = c.one_qubit + c.cnot;
    return c;
}

GateSequence decompose_term(TermKind kind, double theta,
                            const std::vector<int>& role_positions) {
    if (static_cast<int>(role_positions.size()) != locality(kind))
        throw Error("decompose_term: role count does not match term locality");
    std::vector<int> sorted = role_positions;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i + 1] != sorted[i] + 1)
            throw Error("decompose_term: non-contiguous window");
    if (kind == TermKind::OnSiteEnergy)
        return {{GateKind::T, role_positions.at(0), -1, theta}};

    PauliSum op = term_operator(kind, role_positions);

    // Deterministic string order: by support, then by the op letters.
    std::vector<const PauliString*> strings;
    double identity_part = 0.0;
    for (const auto& s : op.strings) {
        if (s.ops.empty())
            identity_part = s.coefficient.real();
        else
            strings.push_back(&s);
    }
    auto key = [](const PauliString* s) {
        std::vector<std::pair<int, char>> k;
        for (const auto& [q, o] : s->ops) k.emplace_back(q, static_cast<char>(o));
        return k;
    };
    std::sort(strings.begin(), strings.end(),
              [&](const PauliString* a, const PauliString* b) { return key(a) < key(b); });

    GateSequence seq;
    if (identity_part != 0.0)
        seq.push_back({GateKind::G, -1, -1, theta * identity_part});

    for (const PauliString* s : strings) {
        std::vector<int> qs;
        for (const auto& [q, o] : s->ops) qs.push_back(q);  // map order: ascending
        // window contiguity: the CNOT ladder needs nearest neighbors
        for (size_t i = 0; i + 1 < qs.size(); ++i)
            if (qs[i + 1] != qs[i] + 1)
                throw Error("decompose_term: non-contiguous window");
        GateSequence basis;
        for (const auto& [q, o] : s->ops) {
            if (o == PauliOp::X) basis.push_back({GateKind::H, q});
            else if (o == PauliOp::Y) basis.push_back({GateKind::Y, q});
        }
        GateSequence ladder;
        for (size_t i = 0; i + 1 < qs.size(); ++i)
            ladder.push_back({GateKind::Cnot, qs[i], qs[i + 1]});

        seq.insert(seq.end(), basis.begin(), basis.end());
        seq.insert(seq.end(), ladder.begin(), ladder.end());
        seq.push_back({GateKind::Rz, qs.back(), -1, 2.0 * theta * s->coefficient.real()});
        seq.insert(seq.end(), ladder.rbegin(), ladder.rend());
        seq.insert(seq.end(), basis.rbegin(), basis.rend());
    }
    return seq;
}

GateSequence decompose_term(TermKind kind, double theta, int window_start) {
    std::vector<int> pos;
    for (int i = 0; i < locality(kind); ++i) pos.push_back(window_start + i);
    return decompose_term(kind, theta, pos);
}

GateSequence fswap_gate(int k) {
    return {{GateKind::H, k},
            {GateKind::Cnot, k, k + 1},
            {GateKind::Cnot, k + 1, k},
            {GateKind::H, k + 1}};
}

Eigen::Matrix4cd fswap_matrix() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = -1;
    return m;
}

namespace {

Eigen::Matrix2cd one_qubit_matrix(const GateOp& g) {
    const Complex i{0.0, 1.0};
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    switch (g.kind) {
        case GateKind::H: m << s, s, s, -s; break;
        case GateKind::Y: m << s, -i * s, i * s, -s; break;  // (Y + Z)/sqrt(2)
        case GateKind::Rz:
            m << std::exp(-i * g.angle / 2.0), 0, 0, std::exp(i * g.angle / 2.0);
            break;
        case GateKind::T: m << 1, 0, 0, std::exp(-i * g.angle); break;
        default: throw Error("internal: not a one-qubit matrix gate");
    }
    return m;
}

}  // namespace

Eigen::MatrixXcd unitary_of(const GateSequence& seq, int n_qubits) {
    if (n_qubits > 6)
        throw GuardrailError("unitary_of: capped at 6 qubits; use the simulator for larger");
    const long long dim = 1LL << n_qubits;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    const Complex i{0.0, 1.0};
    auto kron_at = [&](const Eigen::MatrixXcd& m, int q, int width) {
        Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
        int pos = 0;
        while (pos < n_qubits) {
            if (pos == q) {
                full = Eigen::kroneckerProduct(full, m).eval();
                pos += width;
            } else {
                full = Eigen::kroneckerProduct(full, Eigen::Matrix2cd::Identity()).eval();
                pos += 1;
            }
        }
        return full;
    };
    for (const auto& g : seq) {
        if (g.kind == GateKind::G) {
            u = (std::exp(-i * g.angle) * u).eval();
            continue;
        }
        if (g.is_cnot()) {
            if (g.q0 < 0 || g.q1 < 0 || g.q0 >= n_qubits || g.q1 >= n_qubits)
                throw Error("unitary_of: gate operand outside window");
            if (std::abs(g.q0 - g.q1) != 1)
                throw Error("unitary_of: CNOT operands must be nearest neighbors");
            Eigen::Matrix4cd cn = Eigen::Matrix4cd::Zero();
            if (g.q1 == g.q0 + 1) {
                cn(0, 0) = cn(1, 1) = 1;
                cn(2, 3) = cn(3, 2) = 1;
            } else {
                cn(0, 0) = cn(2, 2) = 1;
                cn(1, 3) = cn(3, 1) = 1;
            }
            u = (kron_at(cn, std::min(g.q0, g.q1), 2) * u).eval();
            continue;
        }
        if (g.q0 < 0 || g.q0 >= n_qubits) throw Error("unitary_of: gate operand outside window");
        u = (kron_at(one_qubit_matrix(g), g.q0, 1) * u).eval();
    }
    return u;
}

}  // namespace fswapnet
