#pragma once

#include <compare>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "saito/polynomial.hpp"

namespace saito {

/// Element of a free module R^q, stored as one polynomial per component.
struct ModuleVector {
    RingPtr ring;
    std::vector<Polynomial> comps;

    ModuleVector() = default;
    ModuleVector(RingPtr r, std::vector<Polynomial> c) : ring(std::move(r)), comps(std::move(c)) {}

    static ModuleVector zero(RingPtr ring, int rank) {
        std::vector<Polynomial> c(rank, Polynomial::zero(ring));
        return ModuleVector(std::move(ring), std::move(c));
    }

    static ModuleVector unit(RingPtr ring, int rank, int pos) {
        ModuleVector v = zero(ring, rank);
        v.comps.at(pos) = Polynomial::constant(v.ring, 1);
        return v;
    }

    int rank() const { return static_cast<int>(comps.size()); }

    bool is_zero() const {
        for (const auto& c : comps)
            if (!c.is_zero()) return false;
        return true;
    }

    /// First nonzero component (position-over-term: lower index dominates), or -1.
    int lead_pos() const {
        for (int i = 0; i < rank(); ++i)
            if (!comps[i].is_zero()) return i;
        return -1;
    }

    friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
        require_same_ring(a.ring, b.ring, "module add");
        if (a.rank() != b.rank()) throw RingMismatchError("module add: rank mismatch");
        ModuleVector r = a;
        for (int i = 0; i < r.rank(); ++i) r.comps[i] = r.comps[i] + b.comps[i];
        return r;
    }
    friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
        require_same_ring(a.ring, b.ring, "module sub");
        if (a.rank() != b.rank()) throw RingMismatchError("module sub: rank mismatch");
        ModuleVector r = a;
        for (int i = 0; i < r.rank(); ++i) r.comps[i] = r.comps[i] - b.comps[i];
        return r;
    }
    friend ModuleVector operator-(const ModuleVector& a) {
        ModuleVector r = a;
        for (auto& c : r.comps) c = -c;
        return r;
    }
    friend ModuleVector operator*(const ModuleVector& a, const Polynomial& p) {
        ModuleVector r = a;
        for (auto& c : r.comps) c = c * p;
        return r;
    }
    friend ModuleVector operator*(const Polynomial& p, const ModuleVector& a) { return a * p; }
    friend ModuleVector operator*(const ModuleVector& a, const Term& t) {
        ModuleVector r = a;
        for (auto& c : r.comps) c = c * t;
        return r;
    }
    friend ModuleVector operator*(const ModuleVector& a, const Rational& c) {
        ModuleVector r = a;
        for (auto& p : r.comps) p = p * c;
        return r;
    }

    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return same_ring(a.ring, b.ring) && a.comps == b.comps;
    }
};

namespace detail {

struct ModuleLead {
    int pos;
    Monomial mono;
    Rational coeff;
};

inline std::optional<ModuleLead> module_lead(const ModuleVector& v) {
    int p = v.lead_pos();
    if (p < 0) return std::nullopt;
    const Term& t = v.comps[p].leading();
    return ModuleLead{p, t.mono, t.coeff};
}

/// Position-over-term: lower component index dominates, ties by the ring order.
inline std::strong_ordering module_lead_compare(int pos_a, const Monomial& a, int pos_b,
                                                const Monomial& b, const MonomialOrder& order) {
    if (pos_a != pos_b) return pos_a < pos_b ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
    return monomial_compare(a, b, order);
}

}  // namespace detail

/// Gröbner basis of a submodule of R^q. `transform`, when tracked, expresses
/// every basis element as an explicit combination of the input generators:
/// basis[i] = sum_j transform[i][j] * gens[j].
struct ModuleGB {
    RingPtr ring;
    int rank = 0;
    int ngens = 0;
    bool tracked = false;
    std::vector<ModuleVector> basis;  // reduced: monic, autoreduced, sorted descending by lead
    std::vector<std::vector<Polynomial>> transform;
};

struct ModuleNF {
    ModuleVector remainder;
    std::vector<Polynomial> cofactors;  // over the basis elements, when tracked
};

namespace detail {

struct GBEntry {
    ModuleVector vec;                   // monic
    ModuleLead lead;
    std::vector<Polynomial> transform;  // over original gens (when tracked)
};

/// Full normal form of v against the given entries; deterministic: the first
/// entry (in list order) whose lead divides the current lead is the reducer.
inline ModuleNF reduce_full(const ModuleVector& v, const std::vector<GBEntry>& entries,
                            bool track, int skip = -1) {
    const RingPtr& ring = v.ring;
    ModuleNF out;
    out.remainder = ModuleVector::zero(ring, v.rank());
    if (track) out.cofactors.assign(entries.size(), Polynomial::zero(ring));
    ModuleVector h = v;
    while (true) {
        auto lead = module_lead(h);
        if (!lead) break;
        bool reduced = false;
        for (std::size_t g = 0; g < entries.size(); ++g) {
            if (static_cast<int>(g) == skip) continue;
            const auto& e = entries[g];
            if (e.lead.pos != lead->pos || !mono_divides(e.lead.mono, lead->mono)) continue;
            Term t{mono_div(lead->mono, e.lead.mono), lead->coeff / e.lead.coeff};
            h = h - e.vec * t;
            if (track)
                out.cofactors[g] = out.cofactors[g] + Polynomial::monomial(ring, t.mono, t.coeff);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the lead term of h into the remainder
            Polynomial lt = Polynomial::monomial(ring, lead->mono, lead->coeff);
            out.remainder.comps[lead->pos] = out.remainder.comps[lead->pos] + lt;
            h.comps[lead->pos] = h.comps[lead->pos] - lt;
        }
    }
    return out;
}

struct SPair {
    int i, j;
    int pos;
    Monomial lcm;
};

struct SPairQueueCmp {
    MonomialOrder order;
    bool operator()(const SPair& a, const SPair& b) const {
        // normal strategy: smallest lcm first, ties by generator indices
        auto c = monomial_compare(a.lcm, b.lcm, order);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.pos != b.pos) return a.pos < b.pos;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace detail

/// Buchberger's algorithm for submodules of R^q with a position-over-term
/// order (lower index dominates). Normal selection strategy with the chain
/// criterion; the coprimality criterion applies only at rank 1, where the
/// classical proof is valid (it fails for modules in general).
inline ModuleGB module_groebner(const std::vector<ModuleVector>& gens, bool track = false) {
    using namespace detail;
    ModuleGB out;
    out.ngens = static_cast<int>(gens.size());
    out.tracked = track;
    if (gens.empty()) return out;
    out.ring = gens.front().ring;
    out.rank = gens.front().rank();
    for (const auto& g : gens) {
        require_same_ring(g.ring, out.ring, "module_groebner");
        if (g.rank() != out.rank) throw RingMismatchError("module_groebner: rank mismatch");
    }
    const MonomialOrder order = out.ring->order;

    std::vector<GBEntry> entries;
    std::set<SPair, SPairQueueCmp> queue(SPairQueueCmp{order});
    std::set<std::pair<int, int>> pending;  // mirrors queue membership for the chain criterion

    auto add_pairs = [&](int t) {
        for (int i = 0; i < t; ++i) {
            if (entries[i].lead.pos != entries[t].lead.pos) continue;
            queue.insert({i, t, entries[t].lead.pos,
                          mono_lcm(entries[i].lead.mono, entries[t].lead.mono)});
            pending.insert({i, t});
        }
    };

    auto append_entry = [&](ModuleVector v, std::vector<Polynomial> trans) {
        auto lead = module_lead(v);
        Rational lc = lead->coeff;
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            v = v * inv;
            if (track)
                for (auto& p : trans) p = p * inv;
            lead->coeff = 1;
        }
        entries.push_back({std::move(v), *lead, std::move(trans)});
        add_pairs(static_cast<int>(entries.size()) - 1);
    };

    for (int gi = 0; gi < out.ngens; ++gi) {
        if (gens[gi].is_zero()) continue;
        std::vector<Polynomial> trans;
        if (track) {
            trans.assign(out.ngens, Polynomial::zero(out.ring));
            trans[gi] = Polynomial::constant(out.ring, 1);
        }
        append_entry(gens[gi], std::move(trans));
    }

    while (!queue.empty()) {
        SPair sp = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({sp.i, sp.j});

        const auto& fi = entries[sp.i];
        const auto& fj = entries[sp.j];
        if (out.rank == 1 && mono_coprime(fi.lead.mono, fj.lead.mono)) continue;
        bool chained = false;
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (static_cast<int>(k) == sp.i || static_cast<int>(k) == sp.j) continue;
            if (entries[k].lead.pos != sp.pos) continue;
            if (!mono_divides(entries[k].lead.mono, sp.lcm)) continue;
            auto key = [&](int a, int b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending.count(key(sp.i, static_cast<int>(k))) &&
                !pending.count(key(sp.j, static_cast<int>(k)))) {
                chained = true;
                break;
            }
        }
        if (chained) continue;

        Term ti{mono_div(sp.lcm, fi.lead.mono), Rational(1)};
        Term tj{mono_div(sp.lcm, fj.lead.mono), Rational(1)};
        ModuleVector s = fi.vec * ti - fj.vec * tj;
        std::vector<Polynomial> strans;
        if (track) {
            strans.assign(out.ngens, Polynomial::zero(out.ring));
            for (int g = 0; g < out.ngens; ++g)
                strans[g] = fi.transform[g] * ti - fj.transform[g] * tj;
        }
        ModuleNF nf = reduce_full(s, entries, track);
        if (nf.remainder.is_zero()) continue;
        if (track) {
            for (std::size_t e = 0; e < entries.size(); ++e) {
                if (nf.cofactors[e].is_zero()) continue;
                for (int g = 0; g < out.ngens; ++g)
                    strans[g] = strans[g] - nf.cofactors[e] * entries[e].transform[g];
            }
        }
        append_entry(std::move(nf.remainder), std::move(strans));
    }

    // Interreduce to the unique reduced basis.
    // 1. minimal: drop entries whose lead is divisible by another kept lead
    std::vector<int> idx(entries.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        auto c = module_lead_compare(entries[a].lead.pos, entries[a].lead.mono,
                                     entries[b].lead.pos, entries[b].lead.mono, order);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return a < b;
    });
    std::vector<GBEntry> kept;
    for (int i : idx) {
        bool redundant = false;
        for (const auto& f : kept) {
            if (f.lead.pos == entries[i].lead.pos &&
                mono_divides(f.lead.mono, entries[i].lead.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(entries[i]));
    }
    // 2. tail-reduce until stable (leads are pairwise indivisible and survive)
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            ModuleNF nf = reduce_full(kept[i].vec, kept, track, static_cast<int>(i));
            if (nf.remainder == kept[i].vec) continue;
            if (track) {
                for (std::size_t e = 0; e < kept.size(); ++e) {
                    if (e == i || nf.cofactors[e].is_zero()) continue;
                    for (int g = 0; g < out.ngens; ++g)
                        kept[i].transform[g] =
                            kept[i].transform[g] - nf.cofactors[e] * kept[e].transform[g];
                }
            }
            kept[i].vec = std::move(nf.remainder);
            changed = true;
        }
    }
    // 3. sort descending by lead
    std::sort(kept.begin(), kept.end(), [&](const GBEntry& a, const GBEntry& b) {
        return module_lead_compare(a.lead.pos, a.lead.mono, b.lead.pos, b.lead.mono, order) ==
               std::strong_ordering::greater;
    });

    for (auto& e : kept) {
        out.basis.push_back(std::move(e.vec));
        if (track) out.transform.push_back(std::move(e.transform));
    }
    return out;
}

/// Normal form against a computed basis; remainder is zero iff the vector
/// lies in the submodule. Cofactors refer to the basis elements.
inline ModuleNF module_normal_form(const ModuleVector& v, const ModuleGB& gb,
                                   bool track = false) {
    using namespace detail;
    std::vector<GBEntry> entries;
    entries.reserve(gb.basis.size());
    for (const auto& b : gb.basis) entries.push_back({b, *module_lead(b), {}});
    return reduce_full(v, entries, track);
}

/// Membership certificate: target = sum_i cofactors[i]*gens[i] + residual,
/// exactly; residual is the module normal form (zero iff member).
struct ModuleLift {
    std::vector<Polynomial> cofactors;
    ModuleVector residual;
};

inline ModuleLift module_lift(const ModuleVector& target, const std::vector<ModuleVector>& gens) {
    ModuleLift out;
    out.cofactors.assign(gens.size(), Polynomial::zero(target.ring));
    ModuleGB gb = module_groebner(gens, /*track=*/true);
    if (gb.basis.empty()) {
        out.residual = target;
        return out;
    }
    ModuleNF nf = module_normal_form(target, gb, /*track=*/true);
    for (std::size_t b = 0; b < gb.basis.size(); ++b) {
        if (nf.cofactors[b].is_zero()) continue;
        for (std::size_t g = 0; g < gens.size(); ++g)
            out.cofactors[g] = out.cofactors[g] + nf.cofactors[b] * gb.transform[b][g];
    }
    out.residual = std::move(nf.remainder);
    // exactness of the certificate is a hard invariant
    ModuleVector check = out.residual;
    for (std::size_t g = 0; g < gens.size(); ++g) check = check + out.cofactors[g] * gens[g];
    if (!(check == target)) throw Error("module_lift: certificate failed to re-expand");
    return out;
}

/// Generating set of the syzygy module {(c_1..c_s) : sum c_i gens[i] = 0},
/// computed by eliminating the leading block of the augmented module
/// {(gens[i]; e_i)} in R^(q+s).
inline std::vector<ModuleVector> module_syzygies(const std::vector<ModuleVector>& gens) {
    if (gens.empty()) return {};
    const RingPtr& ring = gens.front().ring;
    const int q = gens.front().rank();
    const int s = static_cast<int>(gens.size());
    std::vector<ModuleVector> aug;
    aug.reserve(s);
    for (int i = 0; i < s; ++i) {
        require_same_ring(gens[i].ring, ring, "module_syzygies");
        if (gens[i].rank() != q) throw RingMismatchError("module_syzygies: rank mismatch");
        ModuleVector v = ModuleVector::zero(ring, q + s);
        for (int c = 0; c < q; ++c) v.comps[c] = gens[i].comps[c];
        v.comps[q + i] = Polynomial::constant(ring, 1);
        aug.push_back(std::move(v));
    }
    ModuleGB gb = module_groebner(aug);
    std::vector<ModuleVector> syz;
    for (const auto& b : gb.basis) {
        bool pure = true;
        for (int c = 0; c < q; ++c)
            if (!b.comps[c].is_zero()) {
                pure = false;
                break;
            }
        if (!pure) continue;
        ModuleVector v = ModuleVector::zero(ring, s);
        for (int c = 0; c < s; ++c) v.comps[c] = b.comps[q + c];
        if (v.is_zero()) continue;
        ModuleVector check = ModuleVector::zero(ring, q);
        for (int i = 0; i < s; ++i) check = check + v.comps[i] * gens[i];
        if (!check.is_zero()) throw Error("module_syzygies: relation failed to verify");
        syz.push_back(std::move(v));
    }
    return syz;
}

}  // namespace saito
