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

#include "fswapnet/ham_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

namespace fswapnet {

namespace {

constexpr double kMergeTolerance = 1e-12;

std::string format_coeff(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, size_t idx, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(line.tokens.at(idx), &pos);
        if (pos != line.tokens[idx].size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("expected integer for ") + what);
    }
}

double parse_double(const Line& line, size_t idx, const char* what) {
    try {
        size_t pos = 0;
        double v = std::stod(line.tokens.at(idx), &pos);
        if (pos != line.tokens[idx].size() || !std::isfinite(v))
            throw std::invalid_argument("bad");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("expected number for ") + what);
    }
}

// spin token -> list of spins ("both" expands to two copies)
std::vector<Spin> parse_spin_tag(const Line& line, size_t idx) {
    const std::string& tok = line.tokens.at(idx);
    if (tok == "up") return {Spin::Up};
    if (tok == "down") return {Spin::Down};
    if (tok == "both") return {Spin::Up, Spin::Down};
    throw ParseError(line.number, "spin must be one of up/down/both, got '" + tok + "'");
}

std::array<int, 3> negate(const std::array<int, 3>& o) { return {-o[0], -o[1], -o[2]}; }

bool zero_offset(const std::array<int, 3>& o) { return o == std::array<int, 3>{0, 0, 0}; }

// Puts a two-orbital term into canonical form: p < q, or p == q with a
// lexicographically positive offset.  (p, q, offset) and (q, p, -offset)
// describe the same periodic bond.
void canonicalize(InteractionTerm& t) {
    if (!is_two_orbital(t.kind)) return;
    bool flip = t.p > t.q || (t.p == t.q && t.cell_offset < negate(t.cell_offset));
    if (!flip) return;
    std::swap(t.p, t.q);
    t.cell_offset = negate(t.cell_offset);
    if (t.kind == TermKind::CoulombOffSite) std::swap(t.spin, t.spin2);
}

}  // namespace

const char* kind_name(TermKind kind) {
    switch (kind) {
        case TermKind::OnSiteEnergy: return "OnSiteEnergy";
        case TermKind::Hopping: return "Hopping";
        case TermKind::CoulombOnSite: return "CoulombOnSite";
        case TermKind::CoulombOffSite: return "CoulombOffSite";
        case TermKind::ExchangeDensity: return "ExchangeDensity";
        case TermKind::ExchangeSpinFlip: return "ExchangeSpinFlip";
        case TermKind::ExchangePairHop: return "ExchangePairHop";
    }
    return "?";
}

std::vector<SpinOrbital> InteractionTerm::spin_orbitals() const {
    switch (kind) {
        case TermKind::OnSiteEnergy: return {{p, spin}};
        case TermKind::Hopping: return {{p, spin}, {q, spin}};
        case TermKind::CoulombOnSite: return {{p, Spin::Up}, {p, Spin::Down}};
        case TermKind::CoulombOffSite: return {{p, spin}, {q, spin2}};
        case TermKind::ExchangeDensity: return {{p, spin}, {q, spin}};
        case TermKind::ExchangeSpinFlip:
        case TermKind::ExchangePairHop:
            return {{p, Spin::Up}, {p, Spin::Down}, {q, Spin::Up}, {q, Spin::Down}};
    }
    return {};
}

EffectiveHamiltonian parse_hamiltonian_file(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty file (missing norb header)");

    const Line& header = lines.front();
    if (header.tokens[0] != "norb" || header.tokens.size() != 2)
        throw ParseError(header.number, "first line must be 'norb <int>'");
    int norb = parse_int(header, 1, "norb");
    if (norb < 1) throw ParseError(header.number, "norb must be >= 1");

    EffectiveHamiltonian h;
    h.n_orbitals_per_cell = norb;

    std::map<decltype(std::declval<InteractionTerm>().identity()), int> seen;
    auto add = [&](InteractionTerm t, const Line& line) {
        canonicalize(t);
        auto [it, inserted] = seen.emplace(t.identity(), line.number);
        if (!inserted)
            throw ParseError(line.number, std::string("duplicate term (") +
                                              kind_name(t.kind) + "), first seen at line " +
                                              std::to_string(it->second));
        h.terms.push_back(t);
    };
    auto check_orbital = [&](const Line& line, int p) {
        if (p < 1 || p > norb)
            throw ParseError(line.number, "orbital index " + std::to_string(p) +
                                              " out of range [1," + std::to_string(norb) + "]");
    };

    for (size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& tag = line.tokens[0];
        if (tag == "e") {
            if (line.tokens.size() != 7)
                throw ParseError(line.number, "'e' line needs: e p sx sy sz spin value");
            int p = parse_int(line, 1, "p");
            check_orbital(line, p);
            std::array<int, 3> off{parse_int(line, 2, "sx"), parse_int(line, 3, "sy"),
                                   parse_int(line, 4, "sz")};
            if (!zero_offset(off))
                throw ParseError(line.number, "on-site energy with nonzero cell offset");
            double v = parse_double(line, 6, "value");
            for (Spin s : parse_spin_tag(line, 5))
                add({TermKind::OnSiteEnergy, p, 0, s, Spin::Up, v, off}, line);
        } else if (tag == "t") {
            if (line.tokens.size() != 8)
                throw ParseError(line.number, "'t' line needs: t p q sx sy sz spin value");
            int p = parse_int(line, 1, "p"), q = parse_int(line, 2, "q");
            check_orbital(line, p);
            check_orbital(line, q);
            std::array<int, 3> off{parse_int(line, 3, "sx"), parse_int(line, 4, "sy"),
                                   parse_int(line, 5, "sz")};
            if (zero_offset(off) && p >= q)
                throw ParseError(line.number, "hopping requires p < q for zero cell offset");
            double v = parse_double(line, 7, "value");
            for (Spin s : parse_spin_tag(line, 6))
                add({TermKind::Hopping, p, q, s, Spin::Up, v, off}, line);
        } else if (tag == "U") {
            if (line.tokens.size() != 7)
                throw ParseError(line.number, "'U' line needs: U p q sx sy sz value");
            int p = parse_int(line, 1, "p"), q = parse_int(line, 2, "q");
            check_orbital(line, p);
            check_orbital(line, q);
            std::array<int, 3> off{parse_int(line, 3, "sx"), parse_int(line, 4, "sy"),
                                   parse_int(line, 5, "sz")};
            double v = parse_double(line, 6, "value");
            if (p == q && zero_offset(off)) {
                add({TermKind::CoulombOnSite, p, 0, Spin::Up, Spin::Up, v, off}, line);
            } else {
                if (zero_offset(off) && p > q)
                    throw ParseError(line.number, "Coulomb requires p < q for zero cell offset");
                for (Spin s : {Spin::Up, Spin::Down})
                    for (Spin s2 : {Spin::Up, Spin::Down})
                        add({TermKind::CoulombOffSite, p, q, s, s2, v, off}, line);
            }
        } else if (tag == "J") {
            if (line.tokens.size() != 7)
                throw ParseError(line.number, "'J' line needs: J p q sx sy sz value");
            int p = parse_int(line, 1, "p"), q = parse_int(line, 2, "q");
            check_orbital(line, p);
            check_orbital(line, q);
            std::array<int, 3> off{parse_int(line, 3, "sx"), parse_int(line, 4, "sy"),
                                   parse_int(line, 5, "sz")};
            if (zero_offset(off) && p >= q)
                throw ParseError(line.number, "exchange requires p < q for zero cell offset");
            double v = parse_double(line, 6, "value");
            for (Spin s : {Spin::Up, Spin::Down})
                add({TermKind::ExchangeDensity, p, q, s, s, -v, off}, line);
            add({TermKind::ExchangeSpinFlip, p, q, Spin::Up, Spin::Up, v, off}, line);
            add({TermKind::ExchangePairHop, p, q, Spin::Up, Spin::Up, -v, off}, line);
        } else {
            throw ParseError(line.number, "unknown line tag '" + tag + "'");
        }
    }
    return h;
}

std::string serialize_hamiltonian(const EffectiveHamiltonian& h) {
    // Group the expanded kinds back into U/J lines.
    struct PairKey {
        int p, q;
        std::array<int, 3> off;
        auto operator<=>(const PairKey&) const = default;
    };
    std::ostringstream out;
    out << "norb " << h.n_orbitals_per_cell << "\n";

    std::vector<const InteractionTerm*> onsite, hop, uon;
    std::map<PairKey, std::vector<const InteractionTerm*>> uoff, exch;
    for (const auto& t : h.terms) {
        switch (t.kind) {
            case TermKind::OnSiteEnergy: onsite.push_back(&t); break;
            case TermKind::Hopping: hop.push_back(&t); break;
            case TermKind::CoulombOnSite: uon.push_back(&t); break;
            case TermKind::CoulombOffSite:
                uoff[{t.p, t.q, t.cell_offset}].push_back(&t);
                break;
            default: exch[{t.p, t.q, t.cell_offset}].push_back(&t); break;
        }
    }
    auto by_indices = [](const InteractionTerm* a, const InteractionTerm* b) {
        return std::make_tuple(a->p, a->q, a->cell_offset, a->spin) <
               std::make_tuple(b->p, b->q, b->cell_offset, b->spin);
    };
    std::sort(onsite.begin(), onsite.end(), by_indices);
    std::sort(hop.begin(), hop.end(), by_indices);
    std::sort(uon.begin(), uon.end(), by_indices);

    auto spin_tag = [](Spin s) { return s == Spin::Up ? "up" : "down"; };
    for (const auto* t : onsite)
        out << "e " << t->p << " 0 0 0 " << spin_tag(t->spin) << " "
            << format_coeff(t->coefficient) << "\n";
    for (const auto* t : hop)
        out << "t " << t->p << " " << t->q << " " << t->cell_offset[0] << " "
            << t->cell_offset[1] << " " << t->cell_offset[2] << " " << spin_tag(t->spin)
            << " " << format_coeff(t->coefficient) << "\n";
    for (const auto* t : uon)
        out << "U " << t->p << " " << t->p << " 0 0 0 " << format_coeff(t->coefficient)
            << "\n";
    auto close = [](double a, double b) {
        return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    for (const auto& [key, group] : uoff) {
        if (group.size() != 4)
            throw Error("cannot serialize: incomplete CoulombOffSite spin quadruple");
        for (const auto* t : group)
            if (!close(t->coefficient, group[0]->coefficient))
                throw Error("cannot serialize: inconsistent CoulombOffSite coefficients");
        out << "U " << key.p << " " << key.q << " " << key.off[0] << " " << key.off[1]
            << " " << key.off[2] << " " << format_coeff(group[0]->coefficient) << "\n";
    }
    for (const auto& [key, group] : exch) {
        double j = 0;
        bool have_flip = false;
        for (const auto* t : group)
            if (t->kind == TermKind::ExchangeSpinFlip) {
                j = t->coefficient;
                have_flip = true;
            }
        if (group.size() != 4 || !have_flip)
            throw Error("cannot serialize: incomplete exchange term group");
        for (const auto* t : group) {
            double expect = t->kind == TermKind::ExchangeSpinFlip ? j : -j;
            if (!close(t->coefficient, expect))
                throw Error("cannot serialize: inconsistent exchange coefficients");
        }
        out << "J " << key.p << " " << key.q << " " << key.off[0] << " " << key.off[1]
            << " " << key.off[2] << " " << format_coeff(j) << "\n";
    }
    return out.str();
}

EffectiveHamiltonian apply_thresholds(const EffectiveHamiltonian& h, double t_min,
                                      double u_min, double j_min) {
    if (t_min < 0 || u_min < 0 || j_min < 0) throw Error("thresholds must be >= 0");

    // J_pq feeds three term kinds; the pair is kept or dropped as a whole.
    struct PairKey {
        int p, q;
        std::array<int, 3> off;
        auto operator<=>(const PairKey&) const = default;
    };
    std::map<PairKey, double> j_mag;
    for (const auto& t : h.terms)
        if (is_exchange(t.kind)) {
            auto& m = j_mag[{t.p, t.q, t.cell_offset}];
            m = std::max(m, std::abs(t.coefficient));
        }

    EffectiveHamiltonian out = h;
    out.thresholds = {t_min, u_min, j_min};
    out.terms.clear();
    for (const auto& t : h.terms) {
        double mag = std::abs(t.coefficient);
        bool keep = true;
        switch (t.kind) {
            case TermKind::OnSiteEnergy:
            case TermKind::Hopping: keep = mag >= t_min; break;
            case TermKind::CoulombOnSite:
            case TermKind::CoulombOffSite: keep = mag >= u_min; break;
            default: keep = j_mag[{t.p, t.q, t.cell_offset}] >= j_min; break;
        }
        if (keep) out.terms.push_back(t);
    }
    return out;
}

namespace {

// Wraparound can close a two-orbital term onto a single orbital (periodic
// image of itself).  Rewrite such terms with the number-operator algebra so
// the flattened Hamiltonian stays equal to the periodic image sum.
void add_self_wrapped(std::map<std::tuple<TermKind, int, int, Spin, Spin, std::array<int, 3>>,
                               double>& acc,
                      const InteractionTerm& t, int orb) {
    auto bump = [&](TermKind kind, Spin s, Spin s2, double c) {
        int q = is_two_orbital(kind) ? orb : 0;
        acc[{kind, orb, q, s, s2, {0, 0, 0}}] += c;
    };
    double c = t.coefficient;
    switch (t.kind) {
        case TermKind::Hopping:  // a+a + a+a = 2n
            bump(TermKind::OnSiteEnergy, t.spin, Spin::Up, 2 * c);
            break;
        case TermKind::CoulombOffSite:
            if (t.spin != t.spin2)
                bump(TermKind::CoulombOnSite, Spin::Up, Spin::Up, c);
            else  // n^2 = n
                bump(TermKind::OnSiteEnergy, t.spin, Spin::Up, c);
            break;
        case TermKind::ExchangeDensity:
            bump(TermKind::OnSiteEnergy, t.spin, Spin::Up, c);
            break;
        case TermKind::ExchangeSpinFlip:  // c(O + O+) with O = -n_u + n_u n_d
            bump(TermKind::OnSiteEnergy, Spin::Up, Spin::Up, -2 * c);
            bump(TermKind::CoulombOnSite, Spin::Up, Spin::Up, 2 * c);
            break;
        case TermKind::ExchangePairHop:  // c(O + O+) with O = -n_u n_d
            bump(TermKind::CoulombOnSite, Spin::Up, Spin::Up, -2 * c);
            break;
        default: throw Error("internal: unexpected self-wrapped kind");
    }
}

}  // namespace

EffectiveHamiltonian replicate_supercell(const EffectiveHamiltonian& h,
                                         const std::array<int, 3>& grid) {
    for (int g : grid)
        if (g < 1) throw Error("supercell grid components must be >= 1");
    const int norb = h.n_orbitals_per_cell;
    for (const auto& t : h.terms)
        if (t.p > norb || (is_two_orbital(t.kind) && t.q > norb))
            throw Error("replicate_supercell: term orbital index exceeds n_orbitals_per_cell");

    const auto [nx, ny, nz] = grid;
    auto rank = [&](int x, int y, int z) { return (x * ny + y) * nz + z; };
    auto wrap = [](int v, int n) { return ((v % n) + n) % n; };

    std::map<std::tuple<TermKind, int, int, Spin, Spin, std::array<int, 3>>, double> acc;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            for (int z = 0; z < nz; ++z)
                for (const auto& t : h.terms) {
                    int home = rank(x, y, z);
                    int fp = home * norb + t.p;
                    if (!is_two_orbital(t.kind)) {
                        acc[{t.kind, fp, 0, uses_spin(t.kind) ? t.spin : Spin::Up,
                             Spin::Up, {0, 0, 0}}] += t.coefficient;
                        continue;
                    }
                    int partner = rank(wrap(x + t.cell_offset[0], nx),
                                       wrap(y + t.cell_offset[1], ny),
                                       wrap(z + t.cell_offset[2], nz));
                    int fq = partner * norb + t.q;
                    if (fp == fq) {
                        add_self_wrapped(acc, t, fp);
                        continue;
                    }
                    InteractionTerm flat = t;
                    flat.p = fp;
                    flat.q = fq;
                    flat.cell_offset = {0, 0, 0};
                    canonicalize(flat);
                    acc[flat.identity()] += flat.coefficient;
                }

    EffectiveHamiltonian out;
    out.n_orbitals_per_cell = norb;
    out.supercell = grid;
    out.thresholds = h.thresholds;
    for (const auto& [key, c] : acc) {
        if (std::abs(c) < kMergeTolerance) continue;
        auto [kind, p, q, s, s2, off] = key;
        out.terms.push_back({kind, p, q, s, s2, c, off});
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const InteractionTerm& a, const InteractionTerm& b) {
                  return std::make_tuple(a.p, a.q, a.kind, a.spin, a.spin2) <
                         std::make_tuple(b.p, b.q, b.kind, b.spin, b.spin2);
              });
    return out;
}

TermCounts term_counts_per_class(const EffectiveHamiltonian& h) {
    TermCounts c;
    for (TermKind k : kAllTermKinds) c.by_kind[k] = 0;
    for (const auto& t : h.terms) ++c.by_kind[t.kind];
    c.t_class = c.by_kind[TermKind::OnSiteEnergy] + c.by_kind[TermKind::Hopping];
    c.u_class = c.by_kind[TermKind::CoulombOnSite] + c.by_kind[TermKind::CoulombOffSite];
    c.j_class = c.by_kind[TermKind::ExchangeDensity] +
                c.by_kind[TermKind::ExchangeSpinFlip] + c.by_kind[TermKind::ExchangePairHop];
    c.total = static_cast<long long>(h.terms.size());
    return c;
}

const std::vector<CompoundEntry>& compound_registry() {
    static const std::vector<CompoundEntry> registry = {
        {"TMTSF2PF6", "organic superconductor", 4},
        {"K3C60", "organic superconductor", 6},
        {"LaFeAsO", "iron-based superconductor", 20},
        {"BaFe2As2", "iron-based superconductor", 20},
        {"LiFeAs", "iron-based superconductor", 20},
        {"FeSe", "iron-based superconductor", 20},
        {"MnO", "binary transition metal oxide", 10},
        {"FeO", "binary transition metal oxide", 10},
        {"CoO", "binary transition metal oxide", 10},
        {"NiO", "binary transition metal oxide", 10},
        {"SrVO3", "perovskite oxide", 10},
        {"SrCrO3", "perovskite oxide", 10},
        {"SrMnO3", "perovskite oxide", 10},
    };
    return registry;
}

std::optional<CompoundEntry> find_compound(const std::string& name) {
    for (const auto& e : compound_registry())
        if (e.name == name) return e;
    return std::nullopt;
}

}  // namespace fswapnet
