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

#include <map>
#include <optional>
#include <string>

#include "fswapnet/types.hpp"

namespace fswapnet {

// Coefficient file format (line-based, '#' comments):
//   norb <int>
//   e <p> <sx> <sy> <sz> <spin> <value>
//   t <p> <q> <sx> <sy> <sz> <spin> <value>     spin in {up,down,both}
//   U <p> <q> <sx> <sy> <sz> <value>            p=q with zero offset -> CoulombOnSite
//   J <p> <q> <sx> <sy> <sz> <value>            expands to the three exchange kinds
EffectiveHamiltonian parse_hamiltonian_file(const std::string& text);

// Inverse of parse: emits a coefficient file whose re-parse yields the same
// term multiset.  Throws Error if the term set is not expressible (e.g. a
// CoulombOffSite spin combination without its three siblings).
std::string serialize_hamiltonian(const EffectiveHamiltonian& h);

EffectiveHamiltonian apply_thresholds(const EffectiveHamiltonian& h, double t_min,
                                      double u_min, double j_min);

inline EffectiveHamiltonian apply_thresholds(const EffectiveHamiltonian& h) {
    return apply_thresholds(h, h.thresholds.t_min, h.thresholds.u_min, h.thresholds.j_min);
}

// Stamps every per-cell term into each cell of the grid under periodic
// boundary conditions and flattens orbital indices (row-major over (x,y,z),
// then local orbital).  Wraparound duplicates are merged by summing
// coefficients after canonical p<q reordering.
EffectiveHamiltonian replicate_supercell(const EffectiveHamiltonian& h,
                                         const std::array<int, 3>& grid);

struct TermCounts {
    std::map<TermKind, long long> by_kind;
    long long t_class = 0;  // OnSiteEnergy + Hopping
    long long u_class = 0;  // CoulombOnSite + CoulombOffSite
    long long j_class = 0;  // the three exchange kinds
    long long total = 0;

    long long of(TermKind k) const {
        auto it = by_kind.find(k);
        return it == by_kind.end() ? 0 : it->second;
    }
};

TermCounts term_counts_per_class(const EffectiveHamiltonian& h);

// The 13 compounds of Table I.
const std::vector<CompoundEntry>& compound_registry();
std::optional<CompoundEntry> find_compound(const std::string& name);

}  // namespace fswapnet
