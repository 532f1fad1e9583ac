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

#include "fswapnet/resources.hpp"

#include <cmath>

namespace fswapnet {

namespace {

long long binom2(long long n) { return n * (n - 1) / 2; }

long long fswap_cost_metric(Metric m) {
    switch (m) {
        case Metric::OneQubit: return kFswapCost.one_qubit;
        case Metric::Cnot: return kFswapCost.cnot;
        default: return kFswapCost.sum;
    }
}

// fswap part of Eq. (8): (q^2 n^2 - 2 q n)/2 fswaps
long long fswap_gates(long long n_qubits_total, Metric m) {
    long long nf = (n_qubits_total * n_qubits_total - 2 * n_qubits_total) / 2;
    return nf * fswap_cost_metric(m);
}

GateCost interaction_gates(const std::map<TermKind, long long>& counts) {
    GateCost g;
    for (const auto& [kind, n] : counts) {
        GateCost c = gate_cost(kind);
        g.one_qubit += n * c.one_qubit;
        g.cnot += n * c.cnot;
    }
    g.sum = g.one_qubit + g.cnot;
    return g;
}

}  // namespace

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::OneQubit: return "one_qubit";
        case Metric::Cnot: return "cnot";
        default: return "sum";
    }
}

ResourceReport gates_from_counts(const std::map<TermKind, long long>& term_counts,
                                 long long n_qubits_total) {
    if (n_qubits_total < 2 || n_qubits_total % 2 != 0)
        throw Error("gates_from_counts: total qubit count must be even and >= 2");
    ResourceReport r;
    r.n_qubits = n_qubits_total;
    r.n_pairswap = binom2(n_qubits_total / 2);

    auto add_class = [](GateCost& dst, TermKind kind, long long n) {
        GateCost c = gate_cost(kind);
        dst.one_qubit += n * c.one_qubit;
        dst.cnot += n * c.cnot;
        dst.sum += n * c.sum;
    };
    for (const auto& [kind, n] : term_counts) {
        if (n < 0) throw Error("gates_from_counts: negative term count");
        switch (kind) {
            case TermKind::OnSiteEnergy:
            case TermKind::Hopping: add_class(r.class_t, kind, n); break;
            case TermKind::CoulombOnSite:
            case TermKind::CoulombOffSite: add_class(r.class_u, kind, n); break;
            default: add_class(r.class_j, kind, n); break;
        }
    }
    long long n_fswap = 4 * r.n_pairswap;
    r.class_fswap = {n_fswap * kFswapCost.one_qubit, n_fswap * kFswapCost.cnot,
                     n_fswap * kFswapCost.sum};
    r.total = {r.class_t.one_qubit + r.class_u.one_qubit + r.class_j.one_qubit +
                   r.class_fswap.one_qubit,
               r.class_t.cnot + r.class_u.cnot + r.class_j.cnot + r.class_fswap.cnot, 0};
    r.total.sum = r.total.one_qubit + r.total.cnot;

    DepthReport d = depth_report(n_qubits_total >= 4 ? n_qubits_total : 4);
    r.depth_serial_fswap = n_qubits_total >= 4 ? d.serial_fswap_ops : 0;
    r.depth_parallel_fswap = n_qubits_total >= 4 ? d.parallel_fswap_layers : 0;
    return r;
}

ResourceReport gates_vs_cells(const std::map<TermKind, long long>& per_cell_counts,
                              int n_qubits_per_cell, long long n_cells) {
    if (n_cells < 1) throw Error("gates_vs_cells: n_cells must be >= 1");
    std::map<TermKind, long long> scaled;
    for (const auto& [kind, n] : per_cell_counts) scaled[kind] = n * n_cells;
    return gates_from_counts(scaled, qubit_count(n_qubits_per_cell, n_cells));
}

GateCost gates_vs_cells_raw(const GateCost& per_cell_gates, int n_qubits_per_cell,
                            long long n_cells) {
    long long n = qubit_count(n_qubits_per_cell, n_cells);
    GateCost g;
    g.one_qubit = per_cell_gates.one_qubit * n_cells + fswap_gates(n, Metric::OneQubit);
    g.cnot = per_cell_gates.cnot * n_cells + fswap_gates(n, Metric::Cnot);
    g.sum = per_cell_gates.sum * n_cells + fswap_gates(n, Metric::Sum);
    return g;
}

long long qubit_count(int n_qubits_per_cell, long long n_cells) {
    if (n_qubits_per_cell < 1 || n_cells < 1)
        throw Error("qubit_count: arguments must be >= 1");
    return static_cast<long long>(n_qubits_per_cell) * n_cells;
}

long long crossover_cells(const std::map<TermKind, long long>& per_cell_counts,
                          int n_qubits_per_cell, Metric metric) {
    long long a = metric_value(interaction_gates(per_cell_counts), metric);
    if (a == 0) return 1;
    // fswap(n) >= a*n with fswap(n) = g/2 (q^2 n^2 - 2 q n):
    // n >= (2a/g + 2q) / q^2
    const long long g = fswap_cost_metric(metric);
    const long long q = n_qubits_per_cell;
    long long guess = static_cast<long long>(
        std::ceil((2.0 * static_cast<double>(a) / static_cast<double>(g) + 2.0 * q) /
                  (static_cast<double>(q) * q)));
    if (guess < 1) guess = 1;
    auto fswap_ge = [&](long long n) {
        return fswap_gates(q * n, metric) >= a * n;
    };
    while (guess > 1 && fswap_ge(guess - 1)) --guess;
    while (!fswap_ge(guess)) ++guess;
    return guess;
}

double error_budget(long long n_cnot_per_step, long long n_steps) {
    if (n_cnot_per_step < 1 || n_steps < 1)
        throw Error("error_budget: arguments must be >= 1");
    return 2.0 / (static_cast<double>(n_steps) * static_cast<double>(n_cnot_per_step));
}

DepthReport depth_report(long long n_qubits_total) {
    if (n_qubits_total < 4 || n_qubits_total % 2 != 0)
        throw Error("depth_report: needs even qubit count >= 4");
    return {4 * binom2(n_qubits_total / 2), 3 * (n_qubits_total / 2)};
}

const std::vector<Table3Row>& table3_printed() {
    static const std::vector<Table3Row> rows = {
        {"TMTSF2PF6", 4, {{3.9e5, 2.7e5, 6.7e5}, {1.8e7, 1.7e7, 3.5e7}, {1.6e9, 1.6e9, 3.2e9}}},
        {"K3C60", 6, {{5.0e5, 4.2e5, 9.2e5}, {3.7e7, 3.7e7, 7.4e7}, {3.6e9, 3.6e9, 7.2e9}}},
        {"LaFeAsO", 20,
         {{6.5e6, 5.2e6, 1.2e7}, {4.2e8, 4.1e8, 8.4e8}, {4.0e10, 4.0e10, 8.0e10}}},
        {"BaFe2As2", 20,
         {{6.7e6, 5.2e6, 1.2e7}, {4.3e8, 4.1e8, 8.4e8}, {4.0e10, 4.0e10, 8.0e10}}},
        {"LiFeAs", 20,
         {{1.3e7, 8.3e6, 2.1e7}, {4.9e8, 4.4e8, 9.3e8}, {4.1e10, 4.0e10, 8.1e10}}},
        {"FeSe", 20, {{1.7e7, 1.0e7, 2.8e7}, {5.3e8, 4.6e8, 1.0e9}, {4.1e10, 4.1e10, 8.2e10}}},
        {"MnO", 10, {{1.8e6, 1.4e6, 3.2e6}, {1.1e8, 1.0e8, 2.1e8}, {1.0e10, 1.0e10, 2.0e10}}},
        {"FeO", 10, {{3.0e6, 2.0e6, 5.1e6}, {1.2e8, 1.1e8, 2.3e8}, {1.0e10, 1.0e10, 2.0e10}}},
        {"CoO", 10, {{7.9e6, 4.4e6, 1.2e7}, {1.7e8, 1.3e8, 3.0e8}, {1.1e10, 1.0e10, 2.1e10}}},
        {"NiO", 10, {{9.5e6, 5.2e6, 1.5e7}, {1.9e8, 1.4e8, 3.3e8}, {1.1e10, 1.0e10, 2.1e10}}},
        {"SrVO3", 10,
         {{2.9e6, 1.9e6, 4.8e6}, {1.2e8, 1.1e8, 2.3e8}, {1.0e10, 1.0e10, 2.0e10}}},
        {"SrCrO3", 10,
         {{2.5e6, 1.7e6, 4.2e6}, {1.1e8, 1.1e8, 2.2e8}, {1.0e10, 1.0e10, 2.0e10}}},
        {"SrMnO3", 10,
         {{2.9e6, 2.0e6, 4.9e6}, {1.2e8, 1.1e8, 2.3e8}, {1.0e10, 1.0e10, 2.0e10}}},
    };
    return rows;
}

GateCost derived_per_cell_interaction(const Table3Row& row) {
    GateCost g;
    const long long n = row.n_qubits_per_cell * 100LL;
    g.one_qubit = std::llround(row.printed[0][0] - fswap_gates(n, Metric::OneQubit)) / 100;
    g.cnot = std::llround(row.printed[0][1] - fswap_gates(n, Metric::Cnot)) / 100;
    g.sum = std::llround(row.printed[0][2] - fswap_gates(n, Metric::Sum)) / 100;
    if (g.one_qubit < 0 || g.cnot < 0 || g.sum < 0)
        throw Error("derived_per_cell_interaction: negative back-computed count");
    return g;
}

double round_2sig(double x) {
    if (x == 0.0) return 0.0;
    double e = std::floor(std::log10(std::abs(x)));
    double scale = std::pow(10.0, e - 1.0);
    return std::round(x / scale) * scale;
}

}  // namespace fswapnet
