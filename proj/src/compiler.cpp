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

#include "fswapnet/compiler.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

namespace fswapnet {

namespace {

int so_index(const SpinOrbital& so) {
    return (so.orbital - 1) * 2 + static_cast<int>(so.spin);
}

long long unordered_key(int x, int y) {
    if (x > y) std::swap(x, y);
    return (static_cast<long long>(x) << 32) | static_cast<unsigned int>(y);
}

int kind_rank(TermKind k) { return static_cast<int>(k); }

// Executability: 1-local always; 2-local needs physical adjacency of its two
// spin-orbitals; 4-local needs the contiguous block (pu,pd,qu,qd) or
// (qu,qd,pu,pd).  Returns role positions, or nullopt.
std::optional<std::vector<int>> executable_window(const InteractionTerm& t,
                                                 const std::vector<int>& pos_of) {
    auto pos = [&](const SpinOrbital& so) { return pos_of[so_index(so)]; };
    auto roles = t.spin_orbitals();
    std::vector<int> rp;
    rp.reserve(roles.size());
    for (const auto& so : roles) rp.push_back(pos(so));
    switch (locality(t.kind)) {
        case 1: return rp;
        case 2: {
            if (roles[0] == roles[1]) return std::nullopt;  // degenerate term
            return std::abs(rp[0] - rp[1]) == 1 ? std::optional(rp) : std::nullopt;
        }
        default: {
            const int pu = rp[0], pd = rp[1], qu = rp[2], qd = rp[3];
            bool forward = pd == pu + 1 && qu == pu + 2 && qd == pu + 3;
            bool reversed = qd == qu + 1 && pu == qu + 2 && pd == qu + 3;
            return (forward || reversed) ? std::optional(rp) : std::nullopt;
        }
    }
}

std::vector<int> positions_from_layout(const QubitLayout& layout) {
    std::vector<int> pos_of(layout.size());
    for (int i = 0; i < layout.size(); ++i) pos_of[so_index(layout.sequence[i])] = i;
    return pos_of;
}

std::vector<int> event_qubits(const TraceEvent& ev) {
    if (const auto* t = std::get_if<TermExecution>(&ev)) return t->role_positions;
    if (const auto* f = std::get_if<FswapApplication>(&ev))
        return {f->position, f->position + 1};
    return {};
}

}  // namespace

std::vector<int> executable_terms(const QubitLayout& layout, const EffectiveHamiltonian& h,
                                  const std::set<int>& pending) {
    auto pos_of = positions_from_layout(layout);
    struct Cand {
        int min_pos, rank, id;
    };
    std::vector<Cand> cands;
    for (int id : pending) {
        auto w = executable_window(h.terms.at(id), pos_of);
        if (!w) continue;
        cands.push_back({*std::min_element(w->begin(), w->end()),
                         kind_rank(h.terms[id].kind), id});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return std::tie(a.min_pos, a.rank, a.id) < std::tie(b.min_pos, b.rank, b.id);
    });
    std::vector<int> ids;
    for (const auto& c : cands) ids.push_back(c.id);
    return ids;
}

CompiledCircuit compile_trotter_step(const EffectiveHamiltonian& h, double dt,
                                     const CompileOptions& options) {
    if (!h.is_flat())
        throw Error("compile_trotter_step: Hamiltonian not flattened "
                    "(apply replicate_supercell first)");
    const long long no_ll = h.n_orbitals();
    if (no_ll < 1) throw Error("compile_trotter_step: empty Hamiltonian");
    const int No = static_cast<int>(no_ll);
    const int N = 2 * No;
    for (const auto& t : h.terms)
        if (t.p < 1 || t.p > No || (is_two_orbital(t.kind) && (t.q < 1 || t.q > No)))
            throw Error("compile_trotter_step: term orbital index out of range");

    QubitLayout layout = QubitLayout::initial(No);
    std::vector<int> pos_of = positions_from_layout(layout);

    CompiledCircuit cc;
    cc.n_qubits = N;
    cc.dt = dt;

    // term indices: 1-local list plus hash buckets for 2-/4-local lookup
    std::vector<int> one_local;
    std::unordered_map<long long, std::vector<int>> two_local;   // spin-orbital pair
    std::unordered_map<long long, std::vector<int>> four_local;  // orbital pair
    std::vector<char> pending(h.terms.size(), 1);
    long long n_pending = static_cast<long long>(h.terms.size());
    for (size_t i = 0; i < h.terms.size(); ++i) {
        const auto& t = h.terms[i];
        switch (locality(t.kind)) {
            case 1: one_local.push_back(static_cast<int>(i)); break;
            case 2: {
                auto so = t.spin_orbitals();
                two_local[unordered_key(so_index(so[0]), so_index(so[1]))].push_back(
                    static_cast<int>(i));
                break;
            }
            default: four_local[unordered_key(t.p, t.q)].push_back(static_cast<int>(i));
        }
    }

    auto push_gate = [&](GateOp g) {
        if (options.gate_sink)
            options.gate_sink(g);
        else
            cc.gates.push_back(g);
    };
    auto add_cost = [&](const GateCost& c) {
        cc.totals.one_qubit += c.one_qubit;
        cc.totals.cnot += c.cnot;
    };

    int scan_block = 0;
    auto emit_term = [&](int id, std::vector<int> roles) {
        pending[id] = 0;
        --n_pending;
        const auto& t = h.terms[id];
        if (options.record_trace) {
            TermExecution ev;
            ev.term_id = id;
            ev.role_positions = roles;
            ev.window_start = *std::min_element(roles.begin(), roles.end());
            ev.window_size = locality(t.kind);
            ev.scan_block = scan_block;
            if (options.record_layouts) ev.layout = layout.sequence;
            cc.trace.events.push_back(std::move(ev));
        }
        add_cost(gate_cost(t.kind));
        if (options.emit_gates) {
            auto seq = decompose_term(t.kind, t.coefficient * dt, roles);
            for (auto& g : seq) {
                g.term_id = id;
                push_gate(g);
            }
        }
    };

    std::vector<int> dirty;
    auto scan = [&](bool full) {
        ++scan_block;
        struct Cand {
            int min_pos, rank, id;
            std::vector<int> roles;
        };
        std::vector<Cand> cands;
        auto try2 = [&](int i) {
            if (i < 0 || i + 1 >= N) return;
            auto it = two_local.find(unordered_key(so_index(layout.sequence[i]),
                                                   so_index(layout.sequence[i + 1])));
            if (it == two_local.end()) return;
            for (int id : it->second) {
                if (!pending[id]) continue;
                auto w = executable_window(h.terms[id], pos_of);
                if (w) cands.push_back({i, kind_rank(h.terms[id].kind), id, std::move(*w)});
            }
        };
        auto try4 = [&](int i) {
            if (i < 0 || i + 3 >= N) return;
            const auto& a = layout.sequence[i];
            const auto& b = layout.sequence[i + 1];
            const auto& c = layout.sequence[i + 2];
            const auto& d = layout.sequence[i + 3];
            if (a.spin != Spin::Up || b.spin != Spin::Down || a.orbital != b.orbital) return;
            if (c.spin != Spin::Up || d.spin != Spin::Down || c.orbital != d.orbital) return;
            auto it = four_local.find(unordered_key(a.orbital, c.orbital));
            if (it == four_local.end()) return;
            for (int id : it->second) {
                if (!pending[id]) continue;
                auto w = executable_window(h.terms[id], pos_of);
                if (w) cands.push_back({i, kind_rank(h.terms[id].kind), id, std::move(*w)});
            }
        };
        if (full) {
            for (int id : one_local)
                if (pending[id]) {
                    auto w = executable_window(h.terms[id], pos_of);
                    cands.push_back(
                        {(*w)[0], kind_rank(h.terms[id].kind), id, std::move(*w)});
                }
            for (int i = 0; i + 1 < N; ++i) try2(i);
            for (int i = 0; i + 3 < N; ++i) try4(i);
        } else {
            // only adjacencies around recently swapped positions can have changed
            std::set<int> starts2, starts4;
            for (int d : dirty) {
                starts2.insert(d - 1);
                starts2.insert(d);
                for (int k = d - 3; k <= d; ++k) starts4.insert(k);
            }
            for (int i : starts2) try2(i);
            for (int i : starts4) try4(i);
        }
        dirty.clear();
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return std::tie(a.min_pos, a.rank, a.id) < std::tie(b.min_pos, b.rank, b.id);
        });
        for (auto& c : cands) emit_term(c.id, std::move(c.roles));
    };

    std::set<std::pair<int, int>> fswap_sublayers;
    int next_fswap_id = 0;
    auto do_fswap = [&](int k, int step, int sub) {
        if (options.record_trace) {
            FswapApplication ev;
            ev.position = k;
            ev.fswap_id = next_fswap_id;
            ev.step = step;
            ev.sub = sub;
            if (options.record_layouts) ev.layout = layout.sequence;
            cc.trace.events.push_back(std::move(ev));
        }
        if (options.emit_gates) {
            for (auto g : fswap_gate(k)) {
                g.fswap_id = next_fswap_id;
                push_gate(g);
            }
        }
        add_cost({kFswapCost.one_qubit, kFswapCost.cnot, 0});
        layout.swap_positions(k);
        pos_of[so_index(layout.sequence[k])] = k;
        pos_of[so_index(layout.sequence[k + 1])] = k + 1;
        dirty.push_back(k);
        dirty.push_back(k + 1);
        fswap_sublayers.insert({step, sub});
        ++cc.n_fswap;
        ++next_fswap_id;
    };
    auto pair_swap = [&](int pi, int step) {
        const int k = 2 * pi;
        scan(false);
        do_fswap(k + 1, step, 0);
        scan(false);
        do_fswap(k, step, 1);
        do_fswap(k + 2, step, 1);
        scan(false);
        do_fswap(k + 1, step, 2);
        ++cc.n_pairswap;
    };

    scan(true);  // 1-local terms and everything executable in the initial layout

    if (No > 1) {
        std::vector<int> target(No);
        for (int o = 0; o < No; ++o) target[o] = No - o;
        int step = 1;
        while (layout.orbital_sequence() != target) {
            if (options.record_trace)
                cc.trace.events.push_back(StepMarker{step, step % 2 == 1});
            if (step % 2 == 1) {
                for (int j = 0; 2 * j + 3 <= No; ++j) pair_swap(2 * j + 1, step);
            } else {
                for (int j = 0; 2 * j + 2 <= No; ++j) pair_swap(2 * j, step);
            }
            ++step;
            if (step > 10 * No + 10)
                throw Error("internal: swap network failed to terminate");
        }
        scan(false);  // the last pair swap ends with an unscanned fswap
    }

    if (n_pending > 0) {
        std::vector<int> ids;
        for (size_t i = 0; i < pending.size(); ++i)
            if (pending[i]) ids.push_back(static_cast<int>(i));
        throw UnexecutedTermsError(std::move(ids));
    }

    cc.final_layout = layout;
    cc.depth_serial = cc.n_fswap;
    cc.depth_parallel = static_cast<long long>(fswap_sublayers.size());
    cc.totals.sum = cc.totals.one_qubit + cc.totals.cnot;
    return cc;
}

CoverageReport verify_coverage(const ExecutionTrace& trace, const EffectiveHamiltonian& h) {
    CoverageReport r;
    const int No = static_cast<int>(h.n_orbitals());
    QubitLayout layout = QubitLayout::initial(No);

    std::vector<int> executions(h.terms.size(), 0);
    for (const auto& ev : trace.events) {
        if (const auto* t = std::get_if<TermExecution>(&ev)) {
            if (t->term_id >= 0 && t->term_id < static_cast<int>(executions.size()))
                ++executions[t->term_id];
        } else if (const auto* f = std::get_if<FswapApplication>(&ev)) {
            layout.swap_positions(f->position);
            ++r.n_fswap_actual;
        }
    }
    for (size_t i = 0; i < executions.size(); ++i) {
        if (executions[i] == 0) r.missing.push_back(static_cast<int>(i));
        if (executions[i] > 1) r.duplicated.push_back(static_cast<int>(i));
    }
    r.each_term_once = r.missing.empty() && r.duplicated.empty();

    std::vector<int> target(No);
    for (int o = 0; o < No; ++o) target[o] = No - o;
    r.reversed = layout.orbital_sequence() == target;

    const long long N = 2LL * No;
    r.n_fswap_expected = (N * N - 2 * N) / 2;
    r.fswap_count_ok = r.n_fswap_actual == r.n_fswap_expected;
    return r;
}

LayeredCircuit schedule_parallel(const CompiledCircuit& c) {
    LayeredCircuit out;
    std::vector<std::vector<char>> occupied;  // per layer qubit occupancy
    std::map<std::pair<int, int>, size_t> fswap_layer_of;
    std::map<int, std::vector<size_t>> block_layers;

    auto new_layer = [&](bool is_fswap) {
        out.layers.push_back({is_fswap, {}});
        occupied.emplace_back(c.n_qubits, 0);
        return out.layers.size() - 1;
    };
    auto place = [&](size_t layer, size_t event_idx, const std::vector<int>& qubits) {
        out.layers[layer].events.push_back(event_idx);
        for (int q : qubits) occupied[layer][q] = 1;
    };
    auto fits = [&](size_t layer, const std::vector<int>& qubits) {
        for (int q : qubits)
            if (occupied[layer][q]) return false;
        return true;
    };

    for (size_t e = 0; e < c.trace.events.size(); ++e) {
        const auto& ev = c.trace.events[e];
        auto qubits = event_qubits(ev);
        if (const auto* t = std::get_if<TermExecution>(&ev)) {
            auto& layers = block_layers[t->scan_block];
            size_t chosen = SIZE_MAX;
            for (size_t l : layers)
                if (fits(l, qubits)) {
                    chosen = l;
                    break;
                }
            if (chosen == SIZE_MAX) {
                chosen = new_layer(false);
                layers.push_back(chosen);
            }
            place(chosen, e, qubits);
        } else if (const auto* f = std::get_if<FswapApplication>(&ev)) {
            auto key = std::make_pair(f->step, f->sub);
            auto it = fswap_layer_of.find(key);
            size_t layer = it == fswap_layer_of.end()
                               ? (fswap_layer_of[key] = new_layer(true))
                               : it->second;
            place(layer, e, qubits);
        }
    }
    for (const auto& l : out.layers)
        (l.is_fswap ? out.fswap_layers : out.interaction_layers) += 1;
    return out;
}

}  // namespace fswapnet
