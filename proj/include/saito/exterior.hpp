#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "saito/groebner.hpp"
#include "saito/module_gb.hpp"
#include "saito/polynomial.hpp"

namespace saito {

/// Strictly increasing 1-based index tuple i1 < ... < ip naming the basis
/// p-vector e_{i1} ^ ... ^ e_{ip}. The empty tuple is the scalar basis.
using IndexTuple = std::vector<int>;

inline std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    k = std::min(k, n - k);
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Position of a tuple in the colexicographic enumeration of p-subsets of
/// {1..m}: rank(i1<...<ip) = sum_j C(i_j - 1, j).
inline int colex_rank(const IndexTuple& t) {
    std::int64_t r = 0;
    for (std::size_t j = 0; j < t.size(); ++j) r += binom(t[j] - 1, static_cast<int>(j) + 1);
    return static_cast<int>(r);
}

/// All p-subsets of {1..m} in colexicographic order (the flattening order).
inline std::vector<IndexTuple> all_tuples(int m, int p) {
    if (p < 0 || p > m) return {};
    std::vector<IndexTuple> out;
    IndexTuple cur(p);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= m; ++i) {
            cur[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end(),
              [](const IndexTuple& a, const IndexTuple& b) { return colex_rank(a) < colex_rank(b); });
    return out;
}

/// Merge two strictly increasing tuples into one, returning the sign of the
/// interleaving permutation, or 0 if they share an index.
inline int merge_tuples(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining elements of a
            inversions += static_cast<int>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Degree-p element of the exterior power of a free module of rank m over
/// the polynomial ring. Canonical form: strictly increasing index tuples in
/// colex order, nonzero polynomial coefficients. Degree-0 forms carry the
/// single empty tuple (scalars); any form of degree > m is identically zero.
class ExteriorForm {
public:
    using TermList = std::vector<std::pair<IndexTuple, Polynomial>>;

    ExteriorForm() = default;

    static ExteriorForm zero(RingPtr ring, int m, int p) {
        return ExteriorForm(std::move(ring), m, p, {});
    }

    static ExteriorForm scalar(RingPtr ring, int m, Polynomial c) {
        TermList ts;
        if (!c.is_zero()) ts.push_back({IndexTuple{}, std::move(c)});
        return ExteriorForm(std::move(ring), m, 0, std::move(ts));
    }

    /// Basis p-vector for a strictly increasing tuple.
    static ExteriorForm basis(RingPtr ring, int m, IndexTuple t) {
        Polynomial one = Polynomial::constant(ring, 1);
        int p = static_cast<int>(t.size());
        return from_terms(std::move(ring), m, p, {{std::move(t), std::move(one)}});
    }

    /// Builds a form from arbitrary (distinct-index tuple, coefficient)
    /// pairs, sorting each tuple with sign normalization and merging.
    static ExteriorForm from_terms(RingPtr ring, int m, int p, const TermList& terms) {
        std::map<int, std::pair<IndexTuple, Polynomial>> acc;  // colex rank -> term
        for (const auto& [tuple, coeff] : terms) {
            if (static_cast<int>(tuple.size()) != p)
                throw InvalidInputError("ExteriorForm: tuple length differs from degree");
            require_same_ring(coeff.ring(), ring, "ExteriorForm");
            IndexTuple t = tuple;
            int sign = 1;
            // insertion sort, counting swaps; duplicate index kills the term
            for (std::size_t i = 1; i < t.size(); ++i) {
                for (std::size_t j = i; j > 0 && t[j] <= t[j - 1]; --j) {
                    if (t[j] == t[j - 1]) {
                        sign = 0;
                        break;
                    }
                    std::swap(t[j], t[j - 1]);
                    sign = -sign;
                }
                if (sign == 0) break;
            }
            if (sign == 0) continue;
            for (int ix : t)
                if (ix < 1 || ix > m) throw InvalidInputError("ExteriorForm: index out of range");
            Polynomial c = sign == 1 ? coeff : -coeff;
            auto [it, fresh] = acc.try_emplace(colex_rank(t), t, c);
            if (!fresh) it->second.second = it->second.second + c;
        }
        TermList out;
        for (auto& [rk, term] : acc)
            if (!term.second.is_zero()) out.push_back(std::move(term));
        return ExteriorForm(std::move(ring), m, p, std::move(out));
    }

    const RingPtr& ring() const { return ring_; }
    int rank() const { return m_; }
    int degree() const { return p_; }
    const TermList& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial coefficient(const IndexTuple& t) const {
        int rk = colex_rank(t);
        for (const auto& [tuple, c] : terms_)
            if (colex_rank(tuple) == rk) return c;
        return Polynomial::zero(ring_);
    }

    friend ExteriorForm operator-(const ExteriorForm& a) {
        TermList ts = a.terms_;
        for (auto& [t, c] : ts) c = -c;
        return ExteriorForm(a.ring_, a.m_, a.p_, std::move(ts));
    }

    friend ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b) {
        require_compatible(a, b, "form add");
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.p_ != b.p_) throw RingMismatchError("form add: degree mismatch");
        TermList ts = a.terms_;
        for (const auto& t : b.terms_) ts.push_back(t);
        return from_terms(a.ring_, a.m_, a.p_, ts);
    }

    friend ExteriorForm operator-(const ExteriorForm& a, const ExteriorForm& b) {
        return a + (-b);
    }

    friend ExteriorForm operator*(const Polynomial& c, const ExteriorForm& a) {
        TermList ts = a.terms_;
        for (auto& [t, k] : ts) k = k * c;
        return from_terms(a.ring_, a.m_, a.p_, ts);
    }
    friend ExteriorForm operator*(const ExteriorForm& a, const Polynomial& c) { return c * a; }

    /// Zero forms compare equal regardless of recorded degree: the zero
    /// element belongs to every graded component.
    friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
        if (!same_ring(a.ring_, b.ring_) || a.m_ != b.m_) return false;
        if (a.is_zero() && b.is_zero()) return true;
        return a.p_ == b.p_ && a.terms_ == b.terms_;
    }

private:
    ExteriorForm(RingPtr ring, int m, int p, TermList terms)
        : ring_(std::move(ring)), m_(m), p_(p), terms_(std::move(terms)) {
        if (p_ < 0) throw InvalidInputError("ExteriorForm: negative degree");
    }

    static void require_compatible(const ExteriorForm& a, const ExteriorForm& b,
                                   const char* where) {
        require_same_ring(a.ring_, b.ring_, where);
        if (a.m_ != b.m_) throw RingMismatchError(std::string(where) + ": rank mismatch");
    }

    friend ExteriorForm wedge(const ExteriorForm&, const ExteriorForm&);

    RingPtr ring_;
    int m_ = 0;
    int p_ = 0;
    TermList terms_;
};

/// Exterior product; bilinear, graded-antisymmetric, associative. The
/// result has degree deg a + deg b and vanishes identically beyond m.
inline ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
    ExteriorForm::require_compatible(a, b, "wedge");
    const int p = a.degree() + b.degree();
    ExteriorForm::TermList ts;
    IndexTuple merged;
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            int sign = merge_tuples(ta, tb, merged);
            if (sign == 0) continue;
            Polynomial c = ca * cb;
            ts.push_back({merged, sign == 1 ? std::move(c) : -c});
        }
    }
    if (p > a.rank()) return ExteriorForm::zero(a.ring(), a.rank(), p);
    return ExteriorForm::from_terms(a.ring(), a.rank(), p, ts);
}

/// Ideal generated by the coefficients of a form, in colex term order.
/// The zero form yields the zero ideal.
inline Ideal coeff_ideal(const ExteriorForm& omega) {
    std::vector<Polynomial> gens;
    gens.reserve(omega.terms().size());
    for (const auto& [t, c] : omega.terms()) gens.push_back(c);
    return Ideal(omega.ring(), std::move(gens));
}

/// A tuple of 1-forms together with their exterior product and its
/// coefficient ideal. k = 0 yields the scalar 1 (unit coefficient ideal).
struct OmegaPackage {
    RingPtr ring;
    int m = 0;
    int k = 0;
    std::vector<ExteriorForm> omegas;
    ExteriorForm Omega;
    Ideal coefficients;
};

inline OmegaPackage omega_of(const std::vector<ExteriorForm>& omegas, RingPtr ring = nullptr,
                             int m = 0) {
    OmegaPackage pkg;
    if (!omegas.empty()) {
        ring = omegas.front().ring();
        m = omegas.front().rank();
    } else if (!ring) {
        throw InvalidInputError("omega_of: empty family needs an explicit ring and rank");
    }
    pkg.ring = ring;
    pkg.m = m;
    pkg.k = static_cast<int>(omegas.size());
    pkg.omegas = omegas;
    pkg.Omega = ExteriorForm::scalar(ring, m, Polynomial::constant(ring, 1));
    for (const auto& w : omegas) {
        if (w.degree() != 1) throw InvalidInputError("omega_of: inputs must be 1-forms");
        pkg.Omega = wedge(pkg.Omega, w);
    }
    pkg.coefficients = coeff_ideal(pkg.Omega);
    return pkg;
}

/// A(gamma_1..gamma_k) = sum_j omega_j ^ gamma_j for uniform-degree gammas.
inline ExteriorForm apply_A(const std::vector<ExteriorForm>& omegas,
                            const std::vector<ExteriorForm>& gammas) {
    if (omegas.size() != gammas.size())
        throw InvalidInputError("apply_A: omega/gamma count mismatch");
    if (omegas.empty()) throw InvalidInputError("apply_A: empty family");
    int degree = -1;  // zero gammas are degree-agnostic
    for (const auto& g : gammas) {
        if (g.is_zero()) continue;
        if (degree == -1) degree = g.degree();
        if (g.degree() != degree) throw InvalidInputError("apply_A: gammas of mixed degree");
    }
    ExteriorForm acc;
    bool first = true;
    for (std::size_t j = 0; j < omegas.size(); ++j) {
        ExteriorForm w = wedge(omegas[j], gammas[j]);
        acc = first ? w : acc + w;
        first = false;
    }
    return acc;
}

/// B(eta) = Omega ^ eta.
inline ExteriorForm apply_B(const ExteriorForm& Omega, const ExteriorForm& eta) {
    return wedge(Omega, eta);
}

/// Basis bijection between degree-p forms and R^C(m,p): coordinates are
/// listed by the colex enumeration of index tuples.
inline ModuleVector flatten(const ExteriorForm& f) {
    const int q = static_cast<int>(binom(f.rank(), f.degree()));
    ModuleVector v = ModuleVector::zero(f.ring(), q);
    for (const auto& [t, c] : f.terms()) v.comps[colex_rank(t)] = c;
    return v;
}

inline ExteriorForm unflatten(const ModuleVector& v, int m, int p) {
    auto tuples = all_tuples(m, p);
    if (v.rank() != static_cast<int>(tuples.size()))
        throw RingMismatchError("unflatten: rank is not C(m,p)");
    ExteriorForm::TermList ts;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        if (!v.comps[i].is_zero()) ts.push_back({tuples[i], v.comps[i]});
    return ExteriorForm::from_terms(v.ring, m, p, ts);
}

/// Coefficient-wise normal form modulo an ideal.
inline ExteriorForm form_nf(const ExteriorForm& f, const Ideal& J) {
    ExteriorForm::TermList ts;
    for (const auto& [t, c] : f.terms()) {
        Polynomial r = J.normal_form(c);
        if (!r.is_zero()) ts.push_back({t, r});
    }
    return ExteriorForm::from_terms(f.ring(), f.rank(), f.degree(), ts);
}

inline bool form_zero_mod(const ExteriorForm& f, const Ideal& J) {
    for (const auto& [t, c] : f.terms())
        if (!J.contains(c)) return false;
    return true;
}

}  // namespace saito
