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

#include "fswapnet/random_fixtures.hpp"

namespace fswapnet {

namespace {

double coeff(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.25, 2.0);
    std::bernoulli_distribution neg(0.5);
    double c = mag(rng);
    return neg(rng) ? -c : c;
}

InteractionTerm make(TermKind kind, int p, int q, Spin s, Spin s2, double c) {
    InteractionTerm t;
    t.kind = kind;
    t.p = p;
    t.q = q;
    t.spin = s;
    t.spin2 = s2;
    t.coefficient = c;
    return t;
}

}  // namespace

EffectiveHamiltonian random_hamiltonian(std::mt19937_64& rng,
                                        const RandomHamOptions& options) {
    if (options.n_orbitals < 1) throw Error("random_hamiltonian: n_orbitals must be >= 1");
    if (options.require_all_kinds && options.n_orbitals < 2)
        throw Error("random_hamiltonian: all seven kinds need >= 2 orbitals");
    std::bernoulli_distribution keep(options.p_term);
    EffectiveHamiltonian h;
    h.n_orbitals_per_cell = options.n_orbitals;
    h.thresholds = {0.0, 0.0, 0.0};

    auto add_exchange_group = [&](int p, int q, double j) {
        h.terms.push_back(make(TermKind::ExchangeDensity, p, q, Spin::Up, Spin::Up, -j));
        h.terms.push_back(make(TermKind::ExchangeDensity, p, q, Spin::Down, Spin::Down, -j));
        h.terms.push_back(make(TermKind::ExchangeSpinFlip, p, q, Spin::Up, Spin::Up, j));
        h.terms.push_back(make(TermKind::ExchangePairHop, p, q, Spin::Up, Spin::Up, -j));
    };

    for (int p = 1; p <= options.n_orbitals; ++p) {
        bool force = options.require_all_kinds && p == 1;
        for (Spin s : {Spin::Up, Spin::Down})
            if (force || keep(rng))
                h.terms.push_back(make(TermKind::OnSiteEnergy, p, 0, s, s, coeff(rng)));
        if (force || keep(rng))
            h.terms.push_back(make(TermKind::CoulombOnSite, p, 0, Spin::Up, Spin::Up, coeff(rng)));
    }
    for (int p = 1; p <= options.n_orbitals; ++p) {
        for (int q = p + 1; q <= options.n_orbitals; ++q) {
            bool force = options.require_all_kinds && p == 1 && q == 2;
            for (Spin s : {Spin::Up, Spin::Down})
                if (force || keep(rng))
                    h.terms.push_back(make(TermKind::Hopping, p, q, s, s, coeff(rng)));
            for (Spin s : {Spin::Up, Spin::Down})
                for (Spin s2 : {Spin::Up, Spin::Down})
                    if (force || keep(rng))
                        h.terms.push_back(
                            make(TermKind::CoulombOffSite, p, q, s, s2, coeff(rng)));
            if (force || keep(rng)) add_exchange_group(p, q, coeff(rng));
        }
    }
    if (h.terms.empty())
        h.terms.push_back(make(TermKind::OnSiteEnergy, 1, 0, Spin::Up, Spin::Up, coeff(rng)));
    return h;
}

}  // namespace fswapnet
