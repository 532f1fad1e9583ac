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

#include <random>

#include "fswapnet/types.hpp"

namespace fswapnet {

struct RandomHamOptions {
    int n_orbitals = 2;
    // Each candidate term (or exchange group) is kept with this probability.
    double p_term = 0.6;
    // Force at least one term of every kind (needs n_orbitals >= 2).
    bool require_all_kinds = false;
};

// Flat (single-cell) Hamiltonian with random coefficients in
// +/-[0.25, 2.0] eV; exchange groups carry the Eq. (3) sign pattern.
EffectiveHamiltonian random_hamiltonian(std::mt19937_64& rng,
                                        const RandomHamOptions& options);

}  // namespace fswapnet
