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

#include "fswapnet/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <variant>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace fswapnet {

namespace {

inline long long qbit(int n_qubits, int q) { return 1LL << (n_qubits - 1 - q); }

void check_range(int n_qubits, int q) {
    if (q < 0 || q >= n_qubits) throw Error("simulator: gate operand out of qubit range");
}

// One-qubit kernel: v <- (I x m x I) v
void apply_one_qubit(Eigen::VectorXcd& v, int n_qubits, int q,
                     const Eigen::Matrix2cd& m) {
    const long long dim = v.size();
    const long long bit = qbit(n_qubits, q);
    for (long long x = 0; x < dim; ++x) {
        if (x & bit) continue;
        const Complex a = v[x], b = v[x | bit];
        v[x] = m(0, 0) * a + m(0, 1) * b;
        v[x | bit] = m(1, 0) * a + m(1, 1) * b;
    }
}

Eigen::Matrix2cd dense_one_qubit(const GateOp& g) {
    const Complex i{0.0, 1.0};
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    switch (g.kind) {
        case GateKind::H: m << s, s, s, -s; break;
        case GateKind::Y: m << s, -i * s, i * s, -s; break;
        case GateKind::Rz:
            m << std::exp(-i * g.angle / 2.0), 0, 0, std::exp(i * g.angle / 2.0);
            break;
        case GateKind::T: m << 1, 0, 0, std::exp(-i * g.angle); break;
        default: throw Error("simulator: unexpected gate kind");
    }
    return m;
}

}  // namespace

StateVector StateVector::basis(int n_qubits, long long index) {
    if (n_qubits > kMaxDenseQubits)
        throw GuardrailError("StateVector: capped at " + std::to_string(kMaxDenseQubits) +
                             " qubits");
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps = Eigen::VectorXcd::Zero(1LL << n_qubits);
    s.amps[index] = 1.0;
    return s;
}

void apply_gate(Eigen::VectorXcd& amps, int n_qubits, const GateOp& g) {
    const Complex i{0.0, 1.0};
    switch (g.kind) {
        case GateKind::G: amps *= std::exp(-i * g.angle); return;
        case GateKind::Cnot: {
            check_range(n_qubits, g.q0);
            check_range(n_qubits, g.q1);
            const long long cbit = qbit(n_qubits, g.q0);
            const long long tbit = qbit(n_qubits, g.q1);
            for (long long x = 0; x < amps.size(); ++x)
                if ((x & cbit) && !(x & tbit)) std::swap(amps[x], amps[x | tbit]);
            return;
        }
        default:
            check_range(n_qubits, g.q0);
            apply_one_qubit(amps, n_qubits, g.q0, dense_one_qubit(g));
    }
}

StateVector apply_circuit(StateVector psi, const GateSequence& gates) {
    for (const auto& g : gates) apply_gate(psi.amps, psi.n_qubits, g);
    return psi;
}

namespace {

// Batched statevectors: W is rows-of-batch x dim, where W(j, x) is the
// amplitude of basis state x in the j-th vector.  Column operations are
// contiguous, and a 64-row block stays cache-resident across all gates.
constexpr long long kBatch = 64;
using Batch = Eigen::MatrixXcd;

// In-cache 2x2 mixing of two contiguous columns, with the complex products
// expanded to real arithmetic (avoids the checked libm complex-multiply path).
inline void mix_columns(Complex* px, Complex* py, long long rows, const Complex& c00,
                        const Complex& c01, const Complex& c10, const Complex& c11) {
    double* __restrict fx = reinterpret_cast<double*>(px);
    double* __restrict fy = reinterpret_cast<double*>(py);
    const double a0r = c00.real(), a0i = c00.imag(), a1r = c01.real(), a1i = c01.imag();
    const double b0r = c10.real(), b0i = c10.imag(), b1r = c11.real(), b1i = c11.imag();
    for (long long j = 0; j < 2 * rows; j += 2) {
        const double ar = fx[j], ai = fx[j + 1], br = fy[j], bi = fy[j + 1];
        fx[j] = a0r * ar - a0i * ai + a1r * br - a1i * bi;
        fx[j + 1] = a0r * ai + a0i * ar + a1r * bi + a1i * br;
        fy[j] = b0r * ar - b0i * ai + b1r * br - b1i * bi;
        fy[j + 1] = b0r * ai + b0i * ar + b1r * bi + b1i * br;
    }
}

// Column scale by a complex scalar, expanded to real arithmetic.
inline void scale_column(Complex* px, long long rows, const Complex& c) {
    double* __restrict fx = reinterpret_cast<double*>(px);
    const double cr = c.real(), ci = c.imag();
    for (long long j = 0; j < 2 * rows; j += 2) {
        const double ar = fx[j], ai = fx[j + 1];
        fx[j] = cr * ar - ci * ai;
        fx[j + 1] = cr * ai + ci * ar;
    }
}

void apply_gate_batch(Batch& w, int n_qubits, const GateOp& g) {
    const long long dim = w.cols();
    const Complex i{0.0, 1.0};
    if (g.kind == GateKind::G) {
        w *= std::exp(-i * g.angle);
        return;
    }
    if (g.kind == GateKind::Cnot) {
        check_range(n_qubits, g.q0);
        check_range(n_qubits, g.q1);
        const long long cbit = qbit(n_qubits, g.q0);
        const long long tbit = qbit(n_qubits, g.q1);
        for (long long x = 0; x < dim; ++x)
            if ((x & cbit) && !(x & tbit)) w.col(x).swap(w.col(x | tbit));
        return;
    }
    check_range(n_qubits, g.q0);
    const long long bit = qbit(n_qubits, g.q0);
    const Eigen::Matrix2cd m = dense_one_qubit(g);
    const long long rows = w.rows();
    if (g.kind == GateKind::Rz || g.kind == GateKind::T) {  // diagonal
        for (long long x = 0; x < dim; ++x)
            scale_column(w.col(x).data(), rows, (x & bit) ? m(1, 1) : m(0, 0));
        return;
    }
    for (long long x = 0; x < dim; ++x) {
        if (x & bit) continue;
        mix_columns(w.col(x).data(), w.col(x | bit).data(), rows, m(0, 0), m(0, 1),
                    m(1, 0), m(1, 1));
    }
}

// Runs `ops` over basis-vector batches and assembles the resulting unitary.
Eigen::MatrixXcd unitary_from_batches(
    int n_qubits, const std::function<void(Batch&)>& ops) {
    const long long dim = 1LL << n_qubits;
    Eigen::MatrixXcd u(dim, dim);
    for (long long r = 0; r < dim; r += kBatch) {
        const long long rows = std::min(kBatch, dim - r);
        Batch w = Batch::Zero(rows, dim);
        for (long long j = 0; j < rows; ++j) w(j, r + j) = 1.0;
        ops(w);
        for (long long j = 0; j < rows; ++j) u.col(r + j) = w.row(j).transpose();
    }
    return u;
}

}  // namespace

Eigen::MatrixXcd circuit_unitary(const GateSequence& gates, int n_qubits) {
    if (n_qubits > kMaxEquivalenceQubits)
        throw GuardrailError("circuit_unitary: capped at " +
                             std::to_string(kMaxEquivalenceQubits) + " qubits");
    return unitary_from_batches(n_qubits, [&](Batch& w) {
        for (const auto& g : gates) apply_gate_batch(w, n_qubits, g);
    });
}

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double scale) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) throw Error("expm_hermitian: eigensolver failed");
    const Complex i{0.0, 1.0};
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (long long k = 0; k < phases.size(); ++k)
        phases[k] = std::exp(-i * scale * es.eigenvalues()[k]);
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd expm_taylor(const Eigen::MatrixXcd& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    int s = 0;
    double scaled = norm;
    while (scaled > 0.5) {
        scaled /= 2;
        ++s;
    }
    Eigen::MatrixXcd x = a / std::pow(2.0, s);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::MatrixXcd pow = sum;
    for (int k = 1; k <= 24; ++k) {
        pow = (pow * x / static_cast<double>(k)).eval();
        sum += pow;
    }
    for (int k = 0; k < s; ++k) sum = (sum * sum).eval();
    return sum;
}

namespace {

// One factor of a reference unitary, applied to batched statevectors.
// A rotation is exp(-i angle P) for one Pauli string P, which acts as the
// phased permutation |x> -> phase[x] |x ^ mask>; its phases are precomputed
// once and reused across batches.
struct RotationOp {
    long long mask = 0;
    long long pivot = 0;
    Eigen::VectorXcd phase;
    double co = 1.0;
    Complex msin{0.0, 0.0};
};

struct FswapOp {
    int position = 0;
};

using RefOp = std::variant<RotationOp, FswapOp, Complex>;  // Complex = global phase

RotationOp make_rotation(int n_qubits, const PauliString& s, double angle) {
    const long long dim = 1LL << n_qubits;
    const Complex i{0.0, 1.0};
    RotationOp op;
    for (const auto& [q, p] : s.ops)
        if (p != PauliOp::Z) op.mask |= qbit(n_qubits, q);
    op.pivot = op.mask & -op.mask;
    op.phase.resize(dim);
    for (long long x = 0; x < dim; ++x) {
        Complex p = 1.0;
        for (const auto& [q, o] : s.ops) {
            const int b = (x & qbit(n_qubits, q)) ? 1 : 0;
            if (o == PauliOp::Y) p *= b ? -i : i;
            else if (o == PauliOp::Z) p *= b ? -1.0 : 1.0;
        }
        op.phase[x] = p;
    }
    op.co = std::cos(angle);
    op.msin = -i * std::sin(angle);
    return op;
}

void append_term_ops(std::vector<RefOp>& ops, int n_qubits, const PauliSum& ps,
                     double dt) {
    // strings of one Eq. (3) term commute pairwise, so the exponential factors
    const Complex i{0.0, 1.0};
    for (const auto& s : ps.strings) {
        if (s.ops.empty())
            ops.emplace_back(std::exp(-i * dt * s.coefficient.real()));
        else
            ops.emplace_back(make_rotation(n_qubits, s, dt * s.coefficient.real()));
    }
}

void apply_ref_op(Batch& w, int n_qubits, const RefOp& op) {
    const long long dim = w.cols();
    if (const auto* scale = std::get_if<Complex>(&op)) {
        w *= *scale;
        return;
    }
    if (const auto* f = std::get_if<FswapOp>(&op)) {
        const long long ab = qbit(n_qubits, f->position);
        const long long bb = qbit(n_qubits, f->position + 1);
        for (long long x = 0; x < dim; ++x) {
            const bool a = x & ab, b = x & bb;
            if (a && b) w.col(x) = -w.col(x);
            else if (!a && b) w.col(x).swap(w.col(x ^ ab ^ bb));
        }
        return;
    }
    const auto& r = std::get<RotationOp>(op);
    const long long rows = w.rows();
    if (r.mask == 0) {  // diagonal string
        for (long long x = 0; x < dim; ++x)
            scale_column(w.col(x).data(), rows, r.co + r.msin * r.phase[x]);
        return;
    }
    for (long long x = 0; x < dim; ++x) {
        if (x & r.pivot) continue;
        const long long y = x ^ r.mask;
        mix_columns(w.col(x).data(), w.col(y).data(), rows, Complex(r.co, 0.0),
                    r.msin * r.phase[y], r.msin * r.phase[x], Complex(r.co, 0.0));
    }
}

Eigen::MatrixXcd unitary_from_ops(int n_qubits, const std::vector<RefOp>& ops) {
    return unitary_from_batches(n_qubits, [&](Batch& w) {
        for (const auto& op : ops) apply_ref_op(w, n_qubits, op);
    });
}

}  // namespace

Eigen::MatrixXcd exact_term_exponential(const InteractionTerm& term,
                                        const QubitLayout& layout, double dt) {
    const int n = layout.size();
    if (n > kMaxDenseQubits)
        throw GuardrailError("exact_term_exponential: capped at " +
                             std::to_string(kMaxDenseQubits) + " qubits");
    std::vector<RefOp> ops;
    append_term_ops(ops, n, term_to_pauli(term, layout), dt);
    return unitary_from_ops(n, ops);
}

Eigen::MatrixXcd fswap_product(const ExecutionTrace& trace, int n_qubits) {
    std::vector<RefOp> ops;
    for (const auto& ev : trace.events)
        if (const auto* f = std::get_if<FswapApplication>(&ev))
            ops.emplace_back(FswapOp{f->position});
    return unitary_from_ops(n_qubits, ops);
}

Eigen::MatrixXcd reference_unitary(const ExecutionTrace& trace,
                                   const EffectiveHamiltonian& h, double dt) {
    const int n = static_cast<int>(h.n_qubits());
    if (n > kMaxEquivalenceQubits)
        throw GuardrailError("reference_unitary: capped at " +
                             std::to_string(kMaxEquivalenceQubits) + " qubits");
    const QubitLayout initial = QubitLayout::initial(static_cast<int>(h.n_orbitals()));
    // R * (chronological product of term exponentials): statevectors see the
    // term factors first, then the fswap product R.
    std::vector<RefOp> term_ops, fswap_ops;
    for (const auto& ev : trace.events) {
        if (const auto* t = std::get_if<TermExecution>(&ev))
            append_term_ops(term_ops, n, term_to_pauli(h.terms.at(t->term_id), initial),
                            dt);
        else if (const auto* f = std::get_if<FswapApplication>(&ev))
            fswap_ops.emplace_back(FswapOp{f->position});
    }
    term_ops.insert(term_ops.end(), fswap_ops.begin(), fswap_ops.end());
    return unitary_from_ops(n, term_ops);
}

Equivalence equivalence_check(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("equivalence_check: shape mismatch");
    Equivalence e;
    const bool spectral = a.rows() <= 256;
    e.norm = spectral ? "spectral" : "frobenius";
    auto dist = [&](const Eigen::MatrixXcd& d) {
        if (!spectral) return d.norm();
        return d.jacobiSvd().singularValues()[0];
    };
    e.distance = dist(a - b);
    const Complex tr = (b.adjoint() * a).trace();
    e.phase = std::arg(tr);
    const Complex i{0.0, 1.0};
    e.phase_aligned_distance = dist(a - std::exp(i * e.phase) * b);
    return e;
}

}  // namespace fswapnet
