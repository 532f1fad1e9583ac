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

#include "fswapnet/ham_model.hpp"
#include "fswapnet/random_fixtures.hpp"
#include "helpers.hpp"

using namespace fswapnet;

namespace {

// order-independent fingerprint of a term multiset
std::multiset<std::tuple<TermKind, int, int, Spin, Spin, std::array<int, 3>, double>>
term_multiset(const EffectiveHamiltonian& h) {
    std::multiset<std::tuple<TermKind, int, int, Spin, Spin, std::array<int, 3>, double>> m;
    for (const auto& t : h.terms)
        m.insert({t.kind, t.p, is_two_orbital(t.kind) ? t.q : 0, t.spin, t.spin2,
                  t.cell_offset, t.coefficient});
    return m;
}

}  // namespace

TEST_CASE("single-line CoulombOnSite file") {
    auto h = parse_hamiltonian_file("norb 1\nU 1 1 0 0 0 4.0\n");
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms[0].kind == TermKind::CoulombOnSite);
    CHECK(h.terms[0].p == 1);
    CHECK(h.terms[0].coefficient == 4.0);
    CHECK(h.n_qubits() == 2);
}

TEST_CASE("spin tag both expands hopping to two terms") {
    auto h = parse_hamiltonian_file("norb 2\nt 1 2 0 0 0 both -1.0\n");
    REQUIRE(h.terms.size() == 2);
    CHECK(h.terms[0].spin == Spin::Up);
    CHECK(h.terms[1].spin == Spin::Down);
    for (const auto& t : h.terms) {
        CHECK(t.kind == TermKind::Hopping);
        CHECK(t.coefficient == -1.0);
    }
}

TEST_CASE("off-site U expands to four spin combinations") {
    auto h = parse_hamiltonian_file("norb 2\nU 1 2 0 0 0 0.8\n");
    CHECK(h.terms.size() == 4);
    for (const auto& t : h.terms) CHECK(t.kind == TermKind::CoulombOffSite);
}

TEST_CASE("J line expands to the three exchange kinds with Eq. 3 signs") {
    auto h = parse_hamiltonian_file("norb 2\nJ 1 2 0 0 0 0.6\n");
    auto c = term_counts_per_class(h);
    CHECK(c.of(TermKind::ExchangeDensity) == 2);
    CHECK(c.of(TermKind::ExchangeSpinFlip) == 1);
    CHECK(c.of(TermKind::ExchangePairHop) == 1);
    for (const auto& t : h.terms) {
        if (t.kind == TermKind::ExchangeSpinFlip)
            CHECK(t.coefficient == 0.6);
        else
            CHECK(t.coefficient == -0.6);
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_hamiltonian_file(""), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian_file("norb 0\n"), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian_file("norb 2\nt 2 1 0 0 0 up 1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian_file("norb 1\ne 2 0 0 0 up 1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian_file("norb 1\nq 1 1 0 0 0 1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_hamiltonian_file("norb 2\nt 1 2 0 0 0 left 1.0\n"), ParseError);
    // duplicate detection
    CHECK_THROWS_AS(
        parse_hamiltonian_file("norb 1\nU 1 1 0 0 0 4.0\nU 1 1 0 0 0 2.0\n"), ParseError);
    try {
        parse_hamiltonian_file("norb 2\nt 1 2 0 0 0 up 1.0\nbogus\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("nio_like fixture matches the independent tally") {
    auto h = parse_hamiltonian_file(test::fixture("nio_like.ham"));
    auto c = term_counts_per_class(h);
    CHECK(c.of(TermKind::OnSiteEnergy) == 10);
    CHECK(c.of(TermKind::Hopping) == 10);
    CHECK(c.of(TermKind::CoulombOnSite) == 5);
    CHECK(c.of(TermKind::CoulombOffSite) == 16);
    CHECK(c.of(TermKind::ExchangeDensity) == 6);
    CHECK(c.of(TermKind::ExchangeSpinFlip) == 3);
    CHECK(c.of(TermKind::ExchangePairHop) == 3);
    CHECK(c.total == 53);
    CHECK(c.t_class == 20);
    CHECK(c.u_class == 21);
    CHECK(c.j_class == 12);

    auto ht = apply_thresholds(h);  // defaults 0.01 / 0.20 / 0.20
    CHECK(term_counts_per_class(ht).total == 43);
}

TEST_CASE("parse -> serialize -> parse round-trips the term multiset") {
    for (const char* name : {"hubbard4.ham", "two_orbital_full.ham", "nio_like.ham"}) {
        auto h = parse_hamiltonian_file(test::fixture(name));
        auto h2 = parse_hamiltonian_file(serialize_hamiltonian(h));
        CHECK(term_multiset(h) == term_multiset(h2));
    }
}

TEST_CASE("thresholding: examples and brute-force oracle") {
    auto h = parse_hamiltonian_file("norb 2\nt 1 2 0 0 0 up 0.009\n");
    CHECK(apply_thresholds(h, 0.01, 0.2, 0.2).terms.empty());

    auto nio = parse_hamiltonian_file(test::fixture("nio_like.ham"));
    SUBCASE("zero thresholds are the identity") {
        CHECK(term_multiset(apply_thresholds(nio, 0, 0, 0)) == term_multiset(nio));
    }
    SUBCASE("idempotence") {
        auto once = apply_thresholds(nio, 0.01, 0.2, 0.2);
        auto twice = apply_thresholds(once, 0.01, 0.2, 0.2);
        CHECK(term_multiset(once) == term_multiset(twice));
    }
    SUBCASE("random Hamiltonian vs brute-force filter") {
        std::mt19937_64 rng(7);
        RandomHamOptions o;
        o.n_orbitals = 4;
        auto h50 = random_hamiltonian(rng, o);
        double tm = 0.5, um = 1.0, jm = 0.9;
        auto got = apply_thresholds(h50, tm, um, jm);
        // exchange groups share one |J|, so per-term filtering is equivalent here
        std::vector<InteractionTerm> expect;
        for (const auto& t : h50.terms) {
            double cut = is_exchange(t.kind) ? jm
                         : (t.kind == TermKind::CoulombOnSite ||
                            t.kind == TermKind::CoulombOffSite)
                             ? um
                             : tm;
            if (std::abs(t.coefficient) >= cut) expect.push_back(t);
        }
        EffectiveHamiltonian he = h50;
        he.terms = expect;
        CHECK(term_multiset(got) == term_multiset(he));
    }
}

TEST_CASE("exchange threshold drops all three kinds per orbital pair") {
    auto h = parse_hamiltonian_file("norb 3\nJ 1 2 0 0 0 0.15\nJ 1 3 0 0 0 0.6\n");
    auto ht = apply_thresholds(h, 0.01, 0.2, 0.2);
    auto c = term_counts_per_class(ht);
    CHECK(c.j_class == 4);  // only the (1,3) group
    for (const auto& t : ht.terms) CHECK(t.q == 3);
}

TEST_CASE("replicate_supercell: single cell flattening only") {
    auto h = parse_hamiltonian_file(test::fixture("nio_like.ham"));
    auto flat = replicate_supercell(h, {1, 1, 1});
    // the inter-cell (offset 1,0,0) hopping self-wraps to an on-site energy
    auto c0 = term_counts_per_class(h);
    auto c1 = term_counts_per_class(flat);
    CHECK(c1.of(TermKind::Hopping) == c0.of(TermKind::Hopping) - 2);
    CHECK(flat.is_flat());
}

TEST_CASE("replicate_supercell: 4-ring from one inter-cell hopping") {
    auto h = parse_hamiltonian_file(test::fixture("hubbard4.ham"));
    auto ring = replicate_supercell(h, {4, 1, 1});
    CHECK(ring.n_qubits() == 8);
    auto c = term_counts_per_class(ring);
    CHECK(c.of(TermKind::Hopping) == 8);  // 4 bonds x 2 spins
    CHECK(c.of(TermKind::CoulombOnSite) == 4);
    // each bond present exactly once with the original coefficient
    for (const auto& t : ring.terms)
        if (t.kind == TermKind::Hopping) CHECK(t.coefficient == doctest::Approx(-1.0));
}

TEST_CASE("replicate_supercell: wraparound merge on a 2-ring") {
    // offsets +1 and -1 collide on a grid of length 2: coefficients sum
    auto h = parse_hamiltonian_file(test::fixture("hubbard4.ham"));
    auto two = replicate_supercell(h, {2, 1, 1});
    auto c = term_counts_per_class(two);
    CHECK(c.of(TermKind::Hopping) == 2);  // one bond per spin, doubled coefficient
    for (const auto& t : two.terms)
        if (t.kind == TermKind::Hopping) CHECK(t.coefficient == doctest::Approx(-2.0));
}

TEST_CASE("replicate_supercell: no-wraparound count scaling") {
    auto h = parse_hamiltonian_file(test::fixture("two_orbital_full.ham"));
    auto big = replicate_supercell(h, {3, 2, 1});
    CHECK(term_counts_per_class(big).total == 6 * term_counts_per_class(h).total);
    CHECK(big.n_qubits() == 6 * h.n_qubits());
}

TEST_CASE("compound registry matches the 13 table rows") {
    CHECK(compound_registry().size() == 13);
    CHECK(find_compound("LaFeAsO")->n_qubits_per_cell == 20);
    CHECK(find_compound("K3C60")->n_qubits_per_cell == 6);
    CHECK(find_compound("SrVO3")->n_qubits_per_cell == 10);
    CHECK(find_compound("TMTSF2PF6")->n_qubits_per_cell == 4);
    CHECK(!find_compound("unobtainium"));
    for (const auto& e : compound_registry()) {
        int q = e.n_qubits_per_cell;
        CHECK((q == 4 || q == 6 || q == 10 || q == 20));
    }
}

TEST_CASE("empty Hamiltonian term counts are all zero") {
    EffectiveHamiltonian h;
    h.n_orbitals_per_cell = 3;
    auto c = term_counts_per_class(h);
    CHECK(c.total == 0);
    for (TermKind k : kAllTermKinds) CHECK(c.of(k) == 0);
}

TEST_CASE("single-orbital Hubbard atom class counts") {
    auto h = parse_hamiltonian_file(
        "norb 1\ne 1 0 0 0 both -0.5\nU 1 1 0 0 0 4.0\n");
    auto c = term_counts_per_class(h);
    CHECK(c.of(TermKind::OnSiteEnergy) == 2);
    CHECK(c.of(TermKind::CoulombOnSite) == 1);
    CHECK(c.t_class == 2);
    CHECK(c.u_class == 1);
    CHECK(c.j_class == 0);
}
