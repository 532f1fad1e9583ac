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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fswapnet/compiler.hpp"
#include "fswapnet/ham_model.hpp"
#include "fswapnet/random_fixtures.hpp"
#include "fswapnet/resources.hpp"
#include "helpers.hpp"

using namespace fswapnet;

namespace {

EffectiveHamiltonian empty_ham(int n_orbitals) {
    EffectiveHamiltonian h;
    h.n_orbitals_per_cell = n_orbitals;
    return h;
}

}  // namespace

TEST_CASE("executable_terms: adjacency examples in the initial layout") {
    auto h = parse_hamiltonian_file(test::fixture("two_orbital_full.ham"));
    std::set<int> pending;
    for (int i = 0; i < static_cast<int>(h.terms.size()); ++i) pending.insert(i);
    auto layout = QubitLayout::initial(2);
    auto exec = executable_terms(layout, h, pending);

    auto kind_of = [&](int id) { return h.terms[id].kind; };
    bool coulomb_onsite_ok = false, hopping_listed = false, exchange_listed = false;
    for (int id : exec) {
        if (kind_of(id) == TermKind::CoulombOnSite) coulomb_onsite_ok = true;
        if (kind_of(id) == TermKind::Hopping) hopping_listed = true;
    }
    CHECK(coulomb_onsite_ok);   // (1u,1d) adjacent at positions 0,1
    CHECK(!hopping_listed);     // 1u and 2u sit at positions 0 and 2
    // the 4-local block (1u,1d,2u,2d) is contiguous initially
    for (int id : exec)
        if (locality(kind_of(id)) == 4) exchange_listed = true;
    CHECK(exchange_listed);
}

TEST_CASE("executable_terms: hopping becomes executable after fswap(1)") {
    auto h = parse_hamiltonian_file("norb 2\nt 1 2 0 0 0 both -1.0\n");
    std::set<int> pending{0, 1};
    auto layout = QubitLayout::initial(2);
    CHECK(executable_terms(layout, h, pending).empty());
    layout.swap_positions(1);  // (1u, 2u, 1d, 2d)
    auto exec = executable_terms(layout, h, pending);
    CHECK(exec.size() == 2);  // both spins now adjacent
}

TEST_CASE("network combinatorics for 5 orbitals") {
    auto c = compile_trotter_step(empty_ham(5), 0.1);
    CHECK(c.n_qubits == 10);
    CHECK(c.n_pairswap == 10);
    CHECK(c.n_fswap == 40);
    CHECK(c.depth_serial == 40);
    auto cov = verify_coverage(c.trace, empty_ham(5));
    CHECK(cov.reversed);
    CHECK(cov.fswap_count_ok);
}

TEST_CASE("one orbital: no swaps at all") {
    auto h = parse_hamiltonian_file("norb 1\ne 1 0 0 0 both -0.5\nU 1 1 0 0 0 4.0\n");
    auto c = compile_trotter_step(h, 0.1);
    CHECK(c.n_fswap == 0);
    CHECK(c.n_pairswap == 0);
    CHECK(c.totals.sum == 2 * 1 + 6);  // two T gates + one density block
    CHECK(verify_coverage(c.trace, h).ok());
}

TEST_CASE("reversal and exactly-once execution for random fixtures") {
    std::mt19937_64 rng(21);
    for (int no = 2; no <= 8; ++no) {
        RandomHamOptions o;
        o.n_orbitals = no;
        o.require_all_kinds = true;
        auto h = random_hamiltonian(rng, o);
        auto c = compile_trotter_step(h, 0.05);
        auto cov = verify_coverage(c.trace, h);
        INFO("orbitals: " << no);
        CHECK(cov.ok());
        CHECK(c.final_layout.orbital_sequence().front() == no);
    }
}

TEST_CASE("count identity against the closed-form estimate") {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 25; ++rep) {
        RandomHamOptions o;
        o.n_orbitals = 1 + static_cast<int>(rng() % 6);
        auto h = random_hamiltonian(rng, o);
        auto c = compile_trotter_step(h, 0.05);
        auto f = gates_from_counts(term_counts_per_class(h), h.n_qubits());
        CHECK(f.total.one_qubit == c.totals.one_qubit);
        CHECK(f.total.cnot == c.totals.cnot);
        CHECK(f.total.sum == c.totals.sum);
        // gate list agrees with the counters when gates are emitted
        auto counted = count_gates(c.gates);
        CHECK(counted.one_qubit == c.totals.one_qubit);
        CHECK(counted.cnot == c.totals.cnot);
    }
}

TEST_CASE("determinism: identical input gives the identical circuit") {
    auto h = parse_hamiltonian_file(test::fixture("two_orbital_full.ham"));
    auto a = compile_trotter_step(h, 0.05);
    auto b = compile_trotter_step(h, 0.05);
    REQUIRE(a.gates.size() == b.gates.size());
    for (size_t i = 0; i < a.gates.size(); ++i) {
        CHECK(a.gates[i].kind == b.gates[i].kind);
        CHECK(a.gates[i].q0 == b.gates[i].q0);
        CHECK(a.gates[i].q1 == b.gates[i].q1);
        CHECK(a.gates[i].angle == b.gates[i].angle);
    }
}

TEST_CASE("counts-only mode equals gate-emitting mode") {
    auto h = parse_hamiltonian_file(test::fixture("nio_like.ham"));
    auto flat = replicate_supercell(apply_thresholds(h), {1, 1, 1});
    CompileOptions counts_only;
    counts_only.emit_gates = false;
    counts_only.record_trace = false;
    counts_only.record_layouts = false;
    auto a = compile_trotter_step(flat, 0.05, counts_only);
    auto b = compile_trotter_step(flat, 0.05);
    CHECK(a.totals.sum == b.totals.sum);
    CHECK(a.n_fswap == b.n_fswap);
    CHECK(a.depth_parallel == b.depth_parallel);
    CHECK(a.gates.empty());
    CHECK(a.trace.events.empty());
}

TEST_CASE("streaming sink receives the same gates") {
    auto h = parse_hamiltonian_file(test::fixture("two_orbital_full.ham"));
    GateSequence streamed;
    CompileOptions opt;
    opt.gate_sink = [&](const GateOp& g) { streamed.push_back(g); };
    auto c = compile_trotter_step(h, 0.05, opt);
    CHECK(c.gates.empty());
    auto b = compile_trotter_step(h, 0.05);
    REQUIRE(streamed.size() == b.gates.size());
    for (size_t i = 0; i < streamed.size(); ++i) CHECK(streamed[i].q0 == b.gates[i].q0);
}

TEST_CASE("unexecutable term raises UnexecutedTermsError with ids") {
    // a degenerate 2-local term whose spin-orbitals coincide never executes
    EffectiveHamiltonian h = empty_ham(2);
    h.terms.push_back(test::term(TermKind::ExchangeDensity, 1, 1, Spin::Up, Spin::Up, 0.3));
    try {
        compile_trotter_step(h, 0.1);
        FAIL("expected UnexecutedTermsError");
    } catch (const UnexecutedTermsError& e) {
        REQUIRE(e.term_ids.size() == 1);
        CHECK(e.term_ids[0] == 0);
    }
}

TEST_CASE("unflattened Hamiltonian is rejected") {
    EffectiveHamiltonian h = empty_ham(2);
    auto t = test::term(TermKind::Hopping, 1, 1, Spin::Up, Spin::Up, 0.3);
    t.cell_offset = {1, 0, 0};
    h.terms.push_back(t);
    CHECK_THROWS_AS(compile_trotter_step(h, 0.1), Error);
}

TEST_CASE("schedule_parallel: disjoint layers and fswap layer counts") {
    std::mt19937_64 rng(5);
    RandomHamOptions o;
    o.n_orbitals = 4;
    o.require_all_kinds = true;
    auto h = random_hamiltonian(rng, o);
    auto c = compile_trotter_step(h, 0.05);
    auto layered = schedule_parallel(c);

    // no layer contains two events sharing a qubit
    for (const auto& layer : layered.layers) {
        std::set<int> used;
        for (size_t e : layer.events) {
            const auto& ev = c.trace.events[e];
            std::vector<int> qs;
            if (const auto* t = std::get_if<TermExecution>(&ev)) qs = t->role_positions;
            if (const auto* f = std::get_if<FswapApplication>(&ev))
                qs = {f->position, f->position + 1};
            for (int q : qs) {
                CHECK(!used.count(q));
                used.insert(q);
            }
        }
    }
    CHECK(layered.fswap_layers == 3 * 4);  // 3 sub-layers per round, N_o rounds
    CHECK(layered.fswap_layers + layered.interaction_layers ==
          static_cast<long long>(layered.layers.size()));
}

TEST_CASE("two orbitals: one pair swap, three parallel fswap layers") {
    auto c = compile_trotter_step(empty_ham(2), 0.1);
    CHECK(c.n_pairswap == 1);
    CHECK(c.n_fswap == 4);
    CHECK(c.depth_parallel == 3);
    CHECK(schedule_parallel(c).fswap_layers == 3);
}

TEST_CASE("4-local windows are contiguous at execution time") {
    std::mt19937_64 rng(9);
    RandomHamOptions o;
    o.n_orbitals = 5;
    o.require_all_kinds = true;
    auto h = random_hamiltonian(rng, o);
    auto c = compile_trotter_step(h, 0.05);
    for (const auto& ev : c.trace.events) {
        const auto* t = std::get_if<TermExecution>(&ev);
        if (!t || t->window_size != 4) continue;
        auto sorted = t->role_positions;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < 3; ++i) CHECK(sorted[i + 1] == sorted[i] + 1);
        // snapshot consistency: the four spin-orbitals occupy the window
        REQUIRE(!t->layout.empty());
        const auto sos = h.terms[t->term_id].spin_orbitals();
        std::set<SpinOrbital> want(sos.begin(), sos.end());
        std::set<SpinOrbital> got;
        for (int pos : t->role_positions) got.insert(t->layout[pos]);
        CHECK(want == got);
    }
}

TEST_CASE("incremental scan equals the full-scan oracle") {
    // replay the trace: at each scan block boundary, the terms executed since
    // the previous boundary must all have been executable per the public
    // full-scan predicate evaluated on the block's starting layout
    std::mt19937_64 rng(17);
    RandomHamOptions o;
    o.n_orbitals = 4;
    o.require_all_kinds = true;
    auto h = random_hamiltonian(rng, o);
    auto c = compile_trotter_step(h, 0.05);

    QubitLayout layout = QubitLayout::initial(4);
    std::set<int> pending;
    for (int i = 0; i < static_cast<int>(h.terms.size()); ++i) pending.insert(i);
    for (const auto& ev : c.trace.events) {
        if (const auto* t = std::get_if<TermExecution>(&ev)) {
            auto ok = executable_terms(layout, h, pending);
            CHECK(std::find(ok.begin(), ok.end(), t->term_id) != ok.end());
            pending.erase(t->term_id);
        } else if (const auto* f = std::get_if<FswapApplication>(&ev)) {
            layout.swap_positions(f->position);
        }
    }
    CHECK(pending.empty());
}
