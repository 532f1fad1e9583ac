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

#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "fswapnet/ham_model.hpp"
#include "fswapnet/pauli.hpp"
#include "helpers.hpp"

using namespace fswapnet;

namespace {

Eigen::Matrix2cd pauli_1(char op) {
    const Complex i{0.0, 1.0};
    Eigen::Matrix2cd m;
    switch (op) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

// independent Kronecker-product construction of a Pauli sum
Eigen::MatrixXcd kron_oracle(const PauliSum& ps, int n) {
    const long long dim = 1LL << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& s : ps.strings) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
        for (int q = 0; q < n; ++q) {
            auto it = s.ops.find(q);
            char op = it == s.ops.end() ? 'I' : static_cast<char>(it->second);
            m = Eigen::kroneckerProduct(m, pauli_1(op)).eval();
        }
        out += s.coefficient * m;
    }
    return out;
}

}  // namespace

TEST_CASE("jw_ladder textbook forms") {
    auto layout = QubitLayout::initial(2);
    auto adag0 = jw_ladder({1, Spin::Up}, layout, true);
    REQUIRE(adag0.strings.size() == 2);
    // (X - iY)/2 at position 0
    auto m = pauli_matrix(adag0, 1);
    CHECK(std::abs(m(1, 0) - 1.0) < 1e-14);
    CHECK(m.cwiseAbs().sum() == doctest::Approx(1.0));

    auto a2 = jw_ladder({2, Spin::Up}, layout, false);  // position 2: Z Z (X+iY)/2
    for (const auto& s : a2.strings) {
        CHECK(s.ops.at(0) == PauliOp::Z);
        CHECK(s.ops.at(1) == PauliOp::Z);
    }
}

TEST_CASE("ladder anticommutation on 4 qubits") {
    auto layout = QubitLayout::initial(2);
    std::vector<SpinOrbital> sos = {
        {1, Spin::Up}, {1, Spin::Down}, {2, Spin::Up}, {2, Spin::Down}};
    for (const auto& i : sos)
        for (const auto& j : sos) {
            auto ai = pauli_matrix(jw_ladder(i, layout, false), 4);
            auto adj = pauli_matrix(jw_ladder(j, layout, true), 4);
            Eigen::MatrixXcd anti = ai * adj + adj * ai;
            Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(16, 16);
            if (i == j) expect = Eigen::MatrixXcd::Identity(16, 16);
            CHECK((anti - expect).norm() < 1e-12);
        }
}

TEST_CASE("term_to_pauli: density examples") {
    auto layout = QubitLayout::initial(1);
    auto n_up = term_to_pauli(test::term(TermKind::OnSiteEnergy, 1, 0, Spin::Up, Spin::Up, 0.7),
                              layout);
    auto m = pauli_matrix(n_up, 2);
    // 0.7/2 (I - Z) at position 0
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
    expect(2, 2) = expect(3, 3) = 0.7;
    CHECK((m - expect).norm() < 1e-14);
}

TEST_CASE("term_to_pauli: adjacent hopping is (t/2)(XX + YY)") {
    QubitLayout layout;
    layout.sequence = {{1, Spin::Up}, {2, Spin::Up}};
    auto hs = term_to_pauli(test::term(TermKind::Hopping, 1, 2, Spin::Up, Spin::Up, -1.0),
                            layout);
    REQUIRE(hs.strings.size() == 2);
    for (const auto& s : hs.strings) {
        CHECK(s.ops.size() == 2);
        CHECK(s.coefficient.real() == doctest::Approx(-0.5));
        CHECK(s.coefficient.imag() == doctest::Approx(0.0));
        CHECK(s.ops.at(0) == s.ops.at(1));
    }
}

TEST_CASE("exchange spin-flip is 8 weight-4 strings matching the ladder oracle") {
    auto layout = QubitLayout::initial(2);
    auto t = test::term(TermKind::ExchangeSpinFlip, 1, 2, Spin::Up, Spin::Up, 0.6);
    auto ps = term_to_pauli(t, layout);
    CHECK(ps.strings.size() == 8);
    for (const auto& s : ps.strings) CHECK(s.ops.size() == 4);

    // dense oracle straight from ladder matrices
    auto lad = [&](const SpinOrbital& so, bool dag) {
        return pauli_matrix(jw_ladder(so, layout, dag), 4);
    };
    Eigen::MatrixXcd o = lad({1, Spin::Up}, true) * lad({1, Spin::Down}, false) *
                         lad({2, Spin::Up}, false) * lad({2, Spin::Down}, true);
    Eigen::MatrixXcd expect = 0.6 * (o + o.adjoint());
    CHECK((pauli_matrix(ps, 4) - expect).norm() < 1e-12);
}

TEST_CASE("exchange pair-hop matches the ladder oracle") {
    auto layout = QubitLayout::initial(2);
    auto t = test::term(TermKind::ExchangePairHop, 1, 2, Spin::Up, Spin::Up, -0.6);
    auto lad = [&](const SpinOrbital& so, bool dag) {
        return pauli_matrix(jw_ladder(so, layout, dag), 4);
    };
    Eigen::MatrixXcd o = lad({1, Spin::Up}, true) * lad({1, Spin::Down}, true) *
                         lad({2, Spin::Up}, false) * lad({2, Spin::Down}, false);
    Eigen::MatrixXcd expect = -0.6 * (o + o.adjoint());
    CHECK((pauli_matrix(term_to_pauli(t, layout), 4) - expect).norm() < 1e-12);
}

TEST_CASE("every term kind yields a Hermitian matrix in every layout") {
    auto base = QubitLayout::initial(2);
    std::vector<QubitLayout> layouts = {base};
    {
        QubitLayout l = base;
        l.swap_positions(1);
        layouts.push_back(l);
        l.swap_positions(2);
        layouts.push_back(l);
    }
    for (TermKind kind : kAllTermKinds) {
        auto t = test::term(kind, 1, 2, Spin::Up,
                            kind == TermKind::CoulombOffSite ? Spin::Down : Spin::Up, 0.37);
        for (const auto& layout : layouts) {
            auto m = pauli_matrix(term_to_pauli(t, layout), 4);
            CHECK((m - m.adjoint()).norm() < 1e-12);
        }
    }
}

TEST_CASE("all term kinds commute with total particle number") {
    auto layout = QubitLayout::initial(2);
    PauliSum total_n;
    for (const auto& so : layout.sequence)
        total_n = add(total_n, term_to_pauli(test::term(TermKind::OnSiteEnergy, so.orbital, 0,
                                                        so.spin, so.spin, 1.0),
                                             layout));
    auto nmat = pauli_matrix(total_n, 4);
    for (TermKind kind : kAllTermKinds) {
        auto t = test::term(kind, 1, 2, Spin::Up,
                            kind == TermKind::CoulombOffSite ? Spin::Down : Spin::Up, 0.8);
        auto m = pauli_matrix(term_to_pauli(t, layout), 4);
        CHECK((m * nmat - nmat * m).norm() < 1e-12);
    }
}

TEST_CASE("pauli_matrix basics and the Kronecker oracle") {
    PauliSum z{{PauliString{{{0, PauliOp::Z}}, 1.0}}};
    Eigen::MatrixXcd mz = pauli_matrix(z, 1);
    CHECK(mz(0, 0) == Complex(1.0));
    CHECK(mz(1, 1) == Complex(-1.0));

    PauliSum xx{{PauliString{{{0, PauliOp::X}, {1, PauliOp::X}}, 1.0}}};
    Eigen::MatrixXcd mxx = pauli_matrix(xx, 2);
    for (int i = 0; i < 4; ++i) CHECK(mxx(3 - i, i) == Complex(1.0));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int rep = 0; rep < 10; ++rep) {
        PauliSum ps;
        for (int s = 0; s < 4; ++s) {
            PauliString str;
            for (int q = 0; q < 3; ++q) {
                int pick = static_cast<int>(rng() % 4);
                if (pick == 1) str.ops[q] = PauliOp::X;
                if (pick == 2) str.ops[q] = PauliOp::Y;
                if (pick == 3) str.ops[q] = PauliOp::Z;
            }
            str.coefficient = {u(rng), u(rng)};
            ps.strings.push_back(str);
        }
        CHECK((pauli_matrix(ps, 3) - kron_oracle(ps, 3)).norm() < 1e-12);
    }
}

TEST_CASE("pauli_matrix guardrail") {
    PauliSum z{{PauliString{{{0, PauliOp::Z}}, 1.0}}};
    CHECK_THROWS_AS(pauli_matrix(z, 15), GuardrailError);
    CHECK_THROWS_AS(pauli_matrix(PauliSum{{PauliString{{{5, PauliOp::X}}, 1.0}}}, 3), Error);
}

TEST_CASE("layout helpers") {
    auto l = QubitLayout::initial(3);
    CHECK(l.size() == 6);
    CHECK(l.orbital_sequence() == std::vector<int>{1, 2, 3});
    CHECK(l.position_of({2, Spin::Down}) == 3);
    l.swap_positions(2);
    CHECK(l.position_of({2, Spin::Up}) == 3);
    CHECK_THROWS_AS(l.position_of({9, Spin::Up}), Error);
    CHECK_THROWS_AS(l.swap_positions(5), Error);
}

TEST_CASE("algebra helpers merge like terms") {
    PauliSum x{{PauliString{{{0, PauliOp::X}}, 1.0}}};
    PauliSum y{{PauliString{{{0, PauliOp::Y}}, 1.0}}};
    auto xy = mul(x, y);  // XY = iZ
    REQUIRE(xy.strings.size() == 1);
    CHECK(xy.strings[0].ops.at(0) == PauliOp::Z);
    CHECK(std::abs(xy.strings[0].coefficient - Complex(0, 1)) < 1e-14);

    auto cancel = add(x, scale(x, -1.0));
    CHECK(cancel.strings.empty());
}
