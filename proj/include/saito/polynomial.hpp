#pragma once

#include <map>
#include <utility>
#include <vector>

#include "saito/rational.hpp"
#include "saito/ring.hpp"

namespace saito {

struct Term {
    Monomial mono;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals, always in canonical
/// form: terms sorted descending by the ring's monomial order, no zero
/// coefficients, no duplicate monomials. Immutable after construction.
class Polynomial {
public:
    Polynomial() = default;  // detached zero; only valid as a placeholder

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

    static Polynomial constant(RingPtr ring, Rational c) {
        std::vector<Term> ts;
        if (!saito::is_zero(c)) ts.push_back({Monomial::one(ring->nvars()), std::move(c)});
        return Polynomial(std::move(ring), std::move(ts));
    }

    static Polynomial variable(RingPtr ring, int index) {
        Monomial m = Monomial::one(ring->nvars());
        m.exp.at(index) = 1;
        return Polynomial(std::move(ring), {{std::move(m), Rational(1)}});
    }

    static Polynomial monomial(RingPtr ring, Monomial m, Rational c) {
        if (m.nvars() != ring->nvars())
            throw RingMismatchError("Polynomial::monomial: wrong exponent count");
        std::vector<Term> ts;
        if (!saito::is_zero(c)) ts.push_back({std::move(m), std::move(c)});
        return Polynomial(std::move(ring), std::move(ts));
    }

    /// Canonicalizes an arbitrary term list (merges duplicates, drops zeros, sorts).
    static Polynomial from_terms(RingPtr ring, const std::vector<Term>& terms) {
        auto cmp = [&ring](const Monomial& a, const Monomial& b) {
            return monomial_compare(a, b, ring->order) == std::strong_ordering::greater;
        };
        std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
        for (const auto& t : terms) {
            if (t.mono.nvars() != ring->nvars())
                throw RingMismatchError("Polynomial::from_terms: wrong exponent count");
            acc[t.mono] += t.coeff;
        }
        std::vector<Term> out;
        for (auto& [m, c] : acc)
            if (!saito::is_zero(c)) out.push_back({m, c});
        return Polynomial(std::move(ring), std::move(out));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().coeff == 1;
    }

    /// -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    const Term& leading() const {
        if (terms_.empty()) throw InvalidInputError("leading term of zero polynomial");
        return terms_.front();
    }

    friend Polynomial operator-(const Polynomial& p) {
        std::vector<Term> ts = p.terms_;
        for (auto& t : ts) t.coeff = -t.coeff;
        return Polynomial(p.ring_, std::move(ts));
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        require_same_ring(p.ring_, q.ring_, "poly_add");
        const auto& order = p.ring_->order;
        std::vector<Term> out;
        out.reserve(p.terms_.size() + q.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < p.terms_.size() && j < q.terms_.size()) {
            auto c = monomial_compare(p.terms_[i].mono, q.terms_[j].mono, order);
            if (c == std::strong_ordering::greater) {
                out.push_back(p.terms_[i++]);
            } else if (c == std::strong_ordering::less) {
                out.push_back(q.terms_[j++]);
            } else {
                Rational s = p.terms_[i].coeff + q.terms_[j].coeff;
                if (!saito::is_zero(s)) out.push_back({p.terms_[i].mono, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < p.terms_.size(); ++i) out.push_back(p.terms_[i]);
        for (; j < q.terms_.size(); ++j) out.push_back(q.terms_[j]);
        return Polynomial(p.ring_, std::move(out));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        require_same_ring(p.ring_, q.ring_, "poly_mul");
        std::vector<Term> prods;
        prods.reserve(p.terms_.size() * q.terms_.size());
        for (const auto& a : p.terms_)
            for (const auto& b : q.terms_)
                prods.push_back({mono_mul(a.mono, b.mono), a.coeff * b.coeff});
        return from_terms(p.ring_, prods);
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& c) {
        if (saito::is_zero(c)) return zero(p.ring_);
        std::vector<Term> ts = p.terms_;
        for (auto& t : ts) t.coeff = t.coeff * c;
        return Polynomial(p.ring_, std::move(ts));
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

    /// Multiplication by a single term, cheap path used by reducers.
    friend Polynomial operator*(const Polynomial& p, const Term& t) {
        if (saito::is_zero(t.coeff)) return zero(p.ring_);
        std::vector<Term> ts = p.terms_;
        for (auto& s : ts) {
            s.mono = mono_mul(s.mono, t.mono);
            s.coeff = s.coeff * t.coeff;
        }
        return Polynomial(p.ring_, std::move(ts));  // order is multiplicative: still sorted
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return same_ring(p.ring_, q.ring_) && p.terms_ == q.terms_;
    }

private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Polynomial poly_pow(const Polynomial& p, unsigned e) {
    Polynomial r = Polynomial::constant(p.ring(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

}  // namespace saito
