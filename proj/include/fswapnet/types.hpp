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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace fswapnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(int line_number, const std::string& what)
        : Error("parse error at line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};

struct UnexecutedTermsError : Error {
    explicit UnexecutedTermsError(std::vector<int> ids)
        : Error(describe(ids)), term_ids(std::move(ids)) {}
    std::vector<int> term_ids;

  private:
    static std::string describe(const std::vector<int>& ids) {
        std::string s = "terms never became executable:";
        for (int id : ids) s += " " + std::to_string(id);
        return s;
    }
};

// Desk-scale size limits (dense matrices, statevectors).
struct GuardrailError : Error {
    using Error::Error;
};

enum class Spin : int { Up = 0, Down = 1 };

inline Spin other(Spin s) { return s == Spin::Up ? Spin::Down : Spin::Up; }

struct SpinOrbital {
    int orbital = 0;  // 1-based, flattened over the supercell
    Spin spin = Spin::Up;

    friend bool operator==(const SpinOrbital&, const SpinOrbital&) = default;
    friend auto operator<=>(const SpinOrbital&, const SpinOrbital&) = default;
};

enum class TermKind : int {
    OnSiteEnergy = 0,   // t_pp n_ps
    Hopping,            // t_pq (a+_ps a_qs + h.c.)
    CoulombOnSite,      // U_pp n_pu n_pd
    CoulombOffSite,     // U_pq n_ps n_qs'
    ExchangeDensity,    // -J_pq n_ps n_qs
    ExchangeSpinFlip,   // +J_pq (a+_pu a_pd a_qu a+_qd + h.c.)
    ExchangePairHop,    // -J_pq (a+_pu a+_pd a_qu a_qd + h.c.)
};

constexpr int kNumTermKinds = 7;

constexpr std::array<TermKind, kNumTermKinds> kAllTermKinds = {
    TermKind::OnSiteEnergy,    TermKind::Hopping,
    TermKind::CoulombOnSite,   TermKind::CoulombOffSite,
    TermKind::ExchangeDensity, TermKind::ExchangeSpinFlip,
    TermKind::ExchangePairHop,
};

const char* kind_name(TermKind kind);

// Number of distinct spin-orbitals the term touches.
inline int locality(TermKind kind) {
    switch (kind) {
        case TermKind::OnSiteEnergy: return 1;
        case TermKind::ExchangeSpinFlip:
        case TermKind::ExchangePairHop: return 4;
        default: return 2;
    }
}

// Kinds whose q field is meaningful (two distinct orbitals).
inline bool is_two_orbital(TermKind kind) {
    return kind != TermKind::OnSiteEnergy && kind != TermKind::CoulombOnSite;
}

inline bool is_exchange(TermKind kind) {
    return kind == TermKind::ExchangeDensity || kind == TermKind::ExchangeSpinFlip ||
           kind == TermKind::ExchangePairHop;
}

inline bool uses_spin(TermKind kind) {
    return kind == TermKind::OnSiteEnergy || kind == TermKind::Hopping ||
           kind == TermKind::CoulombOffSite || kind == TermKind::ExchangeDensity;
}

// One Hermitian term of the effective Hamiltonian (Eq. 3 classes).  The stored
// coefficient carries the sign conventions of the Hamiltonian: ExchangeDensity
// and ExchangePairHop store -J, ExchangeSpinFlip stores +J.
struct InteractionTerm {
    TermKind kind = TermKind::OnSiteEnergy;
    int p = 0;
    int q = 0;                    // unused for OnSiteEnergy / CoulombOnSite
    Spin spin = Spin::Up;         // first spin index, where applicable
    Spin spin2 = Spin::Up;        // second spin index (CoulombOffSite); == spin for ExchangeDensity
    double coefficient = 0.0;     // eV
    std::array<int, 3> cell_offset{0, 0, 0};  // source description only

    // Spin-orbitals in decomposition role order.
    std::vector<SpinOrbital> spin_orbitals() const;

    auto identity() const {
        Spin s = uses_spin(kind) ? spin : Spin::Up;
        Spin s2 = (kind == TermKind::CoulombOffSite || kind == TermKind::ExchangeDensity)
                      ? spin2 : Spin::Up;
        int qq = is_two_orbital(kind) ? q : 0;
        return std::make_tuple(kind, p, qq, s, s2, cell_offset);
    }
};

struct Thresholds {
    double t_min = 0.01;  // eV, OnSiteEnergy + Hopping
    double u_min = 0.20;  // eV, Coulomb kinds
    double j_min = 0.20;  // eV, exchange kinds (dropped per orbital pair)
};

struct EffectiveHamiltonian {
    int n_orbitals_per_cell = 0;
    std::array<int, 3> supercell{1, 1, 1};
    std::vector<InteractionTerm> terms;
    Thresholds thresholds;

    long long n_cells() const {
        return static_cast<long long>(supercell[0]) * supercell[1] * supercell[2];
    }
    long long n_orbitals() const { return n_orbitals_per_cell * n_cells(); }
    long long n_qubits() const { return 2 * n_orbitals(); }
    bool is_flat() const {
        for (const auto& t : terms)
            if (t.cell_offset != std::array<int, 3>{0, 0, 0}) return false;
        return true;
    }
};

struct CompoundEntry {
    std::string name;
    std::string classification;
    int n_qubits_per_cell = 0;
};

}  // namespace fswapnet
