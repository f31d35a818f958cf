#pragma once

#include <bit>
#include <memory>
#include <mutex>
#include <vector>

#include "saito/module_gb.hpp"
#include "saito/polynomial.hpp"

namespace saito {

/// Reduced Gröbner basis of an ideal, via the rank-1 module engine.
/// Unique for a fixed ring order; empty input (or all zeros) yields the
/// empty basis of the zero ideal.
inline std::vector<Polynomial> buchberger(const RingPtr& ring,
                                          const std::vector<Polynomial>& gens) {
    std::vector<ModuleVector> vecs;
    vecs.reserve(gens.size());
    for (const auto& g : gens) {
        require_same_ring(g.ring(), ring, "buchberger");
        vecs.push_back(ModuleVector(ring, {g}));
    }
    ModuleGB gb = module_groebner(vecs);
    std::vector<Polynomial> out;
    out.reserve(gb.basis.size());
    for (auto& b : gb.basis) out.push_back(std::move(b.comps[0]));
    return out;
}

/// Remainder of multivariate division of f by a Gröbner basis: zero iff f
/// lies in the ideal; idempotent; the first basis element (in list order)
/// whose leading monomial divides the current lead is always the reducer.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb) {
    const RingPtr& ring = f.ring();
    Polynomial h = f;
    Polynomial r = Polynomial::zero(ring);
    while (!h.is_zero()) {
        const Term& lead = h.leading();
        bool reduced = false;
        for (const auto& g : gb) {
            if (g.is_zero()) continue;
            require_same_ring(g.ring(), ring, "normal_form");
            const Term& gl = g.leading();
            if (!mono_divides(gl.mono, lead.mono)) continue;
            h = h - g * Term{mono_div(lead.mono, gl.mono), lead.coeff / gl.coeff};
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial lt = Polynomial::monomial(ring, lead.mono, lead.coeff);
            r = r + lt;
            h = h - lt;
        }
    }
    return r;
}

/// Finitely generated ideal with a lazily computed, cached reduced Gröbner
/// basis. The cache is filled at most once and shared by copies; concurrent
/// readers see either nothing or the completed basis.
class Ideal {
public:
    Ideal() = default;

    Ideal(RingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {
        for (const auto& g : gens_) require_same_ring(g.ring(), ring_, "Ideal");
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const std::vector<Polynomial>& groebner_basis() const {
        std::call_once(cache_->flag, [this] { cache_->gb = buchberger(ring_, gens_); });
        return cache_->gb;
    }

    bool is_zero_ideal() const { return groebner_basis().empty(); }

    bool is_unit() const {
        const auto& gb = groebner_basis();
        return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
    }

    bool is_proper() const { return !is_unit(); }

    Polynomial normal_form(const Polynomial& f) const {
        return saito::normal_form(f, groebner_basis());
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

private:
    struct Cache {
        std::once_flag flag;
        std::vector<Polynomial> gb;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Equality of ideals, decided by equality of reduced bases.
inline bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) return false;
    return a.groebner_basis() == b.groebner_basis();
}

inline Ideal ideal_sum(const Ideal& a, const std::vector<Polynomial>& more) {
    std::vector<Polynomial> gens = a.generators();
    for (const auto& g : more) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) { return ideal_sum(a, b.generators()); }

/// Membership certificate over the original generators:
/// f = sum_i cofactors[i]*gens[i] + residual, exactly; residual is the
/// normal form, zero iff f is a member.
struct IdealLift {
    std::vector<Polynomial> cofactors;
    Polynomial residual;
};

inline IdealLift ideal_member_with_lift(const Polynomial& f, const Ideal& I) {
    require_same_ring(f.ring(), I.ring(), "ideal_member_with_lift");
    std::vector<ModuleVector> vecs;
    vecs.reserve(I.generators().size());
    for (const auto& g : I.generators()) vecs.push_back(ModuleVector(I.ring(), {g}));
    ModuleLift lift = module_lift(ModuleVector(I.ring(), {f}), vecs);
    return IdealLift{std::move(lift.cofactors), std::move(lift.residual.comps[0])};
}

/// Ideal quotient (I : f) = {g : g*f in I}, computed from the syzygies of
/// (f, g_1, ..., g_s): the f-cofactors of the relations are exactly the
/// quotient's generators.
inline Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
    require_same_ring(f.ring(), I.ring(), "ideal_quotient");
    if (f.is_zero()) throw InvalidInputError("ideal_quotient: divisor is zero");
    std::vector<ModuleVector> vecs;
    vecs.reserve(I.generators().size() + 1);
    vecs.push_back(ModuleVector(I.ring(), {f}));
    for (const auto& g : I.generators()) vecs.push_back(ModuleVector(I.ring(), {g}));
    std::vector<Polynomial> gens;
    for (const auto& s : module_syzygies(vecs))
        if (!s.comps[0].is_zero()) gens.push_back(s.comps[0]);
    return Ideal(I.ring(), std::move(gens));
}

/// f is a non-zero-divisor on R/I iff (I : f) = I.
inline bool is_nzd(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return false;
    return ideal_equal(ideal_quotient(I, f), I);
}

/// Krull dimension of R/I for proper I over the polynomial ring, computed
/// combinatorially from the initial ideal: the largest variable subset S
/// such that no leading-monomial support is contained in S.
inline int krull_dim(const Ideal& I) {
    if (I.is_unit()) throw InvalidInputError("krull_dim: unit ideal");
    const int n = I.ring()->nvars();
    if (n > 25) throw InvalidInputError("krull_dim: too many variables for subset search");
    std::vector<unsigned> supports;
    for (const auto& g : I.groebner_basis()) {
        unsigned mask = 0;
        const Monomial& m = g.leading().mono;
        for (int i = 0; i < n; ++i)
            if (m.exp[i] > 0) mask |= (1u << i);
        supports.push_back(mask);
    }
    int best = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (unsigned sup : supports) {
            if ((sup & s) == sup) {  // support contained in s
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, std::popcount(s));
    }
    return best;
}

}  // namespace saito
