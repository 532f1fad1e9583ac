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

#include "fswapnet/pauli.hpp"

#include <algorithm>

namespace fswapnet {

namespace {

constexpr double kMergeTolerance = 1e-12;

// product of two single-qubit Paulis (neither identity): result op and phase
std::pair<PauliOp, Complex> pauli_product(PauliOp a, PauliOp b) {
    if (a == b) return {PauliOp::X, 1.0};  // op unused when equal (identity)
    const Complex i{0.0, 1.0};
    auto cyc = [](PauliOp x, PauliOp y) {
        return (x == PauliOp::X && y == PauliOp::Y) || (x == PauliOp::Y && y == PauliOp::Z) ||
               (x == PauliOp::Z && y == PauliOp::X);
    };
    PauliOp third = PauliOp::X;
    for (PauliOp t : {PauliOp::X, PauliOp::Y, PauliOp::Z})
        if (t != a && t != b) third = t;
    return {third, cyc(a, b) ? i : -i};
}

PauliSum merged(std::map<std::map<int, PauliOp>, Complex>&& acc) {
    PauliSum out;
    for (auto& [ops, c] : acc) {
        if (std::abs(c) < kMergeTolerance) continue;
        out.strings.push_back({ops, c});
    }
    return out;
}

}  // namespace

PauliSum add(const PauliSum& a, const PauliSum& b) {
    std::map<std::map<int, PauliOp>, Complex> acc;
    for (const auto& s : a.strings) acc[s.ops] += s.coefficient;
    for (const auto& s : b.strings) acc[s.ops] += s.coefficient;
    return merged(std::move(acc));
}

PauliSum mul(const PauliSum& a, const PauliSum& b) {
    std::map<std::map<int, PauliOp>, Complex> acc;
    for (const auto& s1 : a.strings)
        for (const auto& s2 : b.strings) {
            std::map<int, PauliOp> ops = s1.ops;
            Complex c = s1.coefficient * s2.coefficient;
            for (const auto& [q, op2] : s2.ops) {
                auto it = ops.find(q);
                if (it == ops.end()) {
                    ops[q] = op2;
                } else if (it->second == op2) {
                    ops.erase(it);
                } else {
                    auto [op, phase] = pauli_product(it->second, op2);
                    it->second = op;
                    c *= phase;
                }
            }
            acc[ops] += c;
        }
    return merged(std::move(acc));
}

PauliSum scale(const PauliSum& a, Complex f) {
    PauliSum out = a;
    for (auto& s : out.strings) s.coefficient *= f;
    return out;
}

PauliSum hermitian_conjugate(const PauliSum& a) {
    PauliSum out = a;
    for (auto& s : out.strings) s.coefficient = std::conj(s.coefficient);
    return out;
}

QubitLayout QubitLayout::initial(int n_orbitals) {
    QubitLayout l;
    for (int o = 1; o <= n_orbitals; ++o) {
        l.sequence.push_back({o, Spin::Up});
        l.sequence.push_back({o, Spin::Down});
    }
    return l;
}

int QubitLayout::position_of(const SpinOrbital& so) const {
    for (int i = 0; i < size(); ++i)
        if (sequence[i] == so) return i;
    throw Error("spin-orbital (" + std::to_string(so.orbital) +
                (so.spin == Spin::Up ? "u" : "d") + ") not present in layout");
}

void QubitLayout::swap_positions(int i) {
    if (i < 0 || i + 1 >= size()) throw Error("layout swap position out of range");
    std::swap(sequence[i], sequence[i + 1]);
}

std::vector<int> QubitLayout::orbital_sequence() const {
    std::vector<int> orbs;
    for (int i = 0; i + 1 < size(); i += 2) orbs.push_back(sequence[i].orbital);
    return orbs;
}

namespace {

PauliSum ladder_at(int pos, bool dagger) {
    PauliString sx, sy;
    for (int q = 0; q < pos; ++q) {
        sx.ops[q] = PauliOp::Z;
        sy.ops[q] = PauliOp::Z;
    }
    sx.ops[pos] = PauliOp::X;
    sy.ops[pos] = PauliOp::Y;
    sx.coefficient = 0.5;
    sy.coefficient = dagger ? Complex{0.0, -0.5} : Complex{0.0, 0.5};
    return {{sx, sy}};
}

PauliSum number_at(int pos) { return mul(ladder_at(pos, true), ladder_at(pos, false)); }

}  // namespace

PauliSum jw_ladder(const SpinOrbital& target, const QubitLayout& layout, bool dagger) {
    return ladder_at(layout.position_of(target), dagger);
}

PauliSum term_operator(TermKind kind, const std::vector<int>& pos) {
    switch (kind) {
        case TermKind::OnSiteEnergy:
            return number_at(pos.at(0));
        case TermKind::Hopping: {
            auto t1 = mul(ladder_at(pos.at(0), true), ladder_at(pos.at(1), false));
            return add(t1, hermitian_conjugate(t1));
        }
        case TermKind::CoulombOnSite:
        case TermKind::CoulombOffSite:
        case TermKind::ExchangeDensity:
            return mul(number_at(pos.at(0)), number_at(pos.at(1)));
        case TermKind::ExchangeSpinFlip: {
            auto t = mul(mul(ladder_at(pos.at(0), true), ladder_at(pos.at(1), false)),
                         mul(ladder_at(pos.at(2), false), ladder_at(pos.at(3), true)));
            return add(t, hermitian_conjugate(t));
        }
        case TermKind::ExchangePairHop: {
            auto t = mul(mul(ladder_at(pos.at(0), true), ladder_at(pos.at(1), true)),
                         mul(ladder_at(pos.at(2), false), ladder_at(pos.at(3), false)));
            return add(t, hermitian_conjugate(t));
        }
    }
    throw Error("internal: unknown term kind");
}

PauliSum term_to_pauli(const InteractionTerm& term, const QubitLayout& layout) {
    std::vector<int> pos;
    for (const auto& so : term.spin_orbitals()) pos.push_back(layout.position_of(so));
    return scale(term_operator(term.kind, pos), term.coefficient);
}

Eigen::MatrixXcd pauli_matrix(const PauliSum& ps, int n_qubits) {
    if (n_qubits > kMaxDenseQubits)
        throw GuardrailError("pauli_matrix: dense matrices capped at " +
                             std::to_string(kMaxDenseQubits) + " qubits");
    for (const auto& s : ps.strings)
        if (!s.ops.empty() && s.ops.rbegin()->first >= n_qubits)
            throw Error("pauli_matrix: string index exceeds n_qubits");

    const long long dim = 1LL << n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const Complex i{0.0, 1.0};
    for (const auto& s : ps.strings) {
        // each string is a signed/phased permutation: |x> -> phase(x)|x ^ mask>
        long long mask = 0;
        for (const auto& [q, op] : s.ops)
            if (op != PauliOp::Z) mask |= 1LL << (n_qubits - 1 - q);
        for (long long x = 0; x < dim; ++x) {
            Complex phase = s.coefficient;
            for (const auto& [q, op] : s.ops) {
                int b = (x >> (n_qubits - 1 - q)) & 1;
                if (op == PauliOp::Y) phase *= b ? -i : i;
                else if (op == PauliOp::Z) phase *= b ? -1.0 : 1.0;
            }
            m(x ^ mask, x) += phase;
        }
    }
    return m;
}

}  // namespace fswapnet
