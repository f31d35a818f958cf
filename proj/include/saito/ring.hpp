#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "saito/errors.hpp"

namespace saito {

enum class OrderKind {
    Grevlex,  // graded reverse lexicographic (default)
    Lex,      // lexicographic, first variable largest
    Block,    // elimination order: variables [0, split) dominate, grevlex within blocks
};

struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    int block_split = 0;  // meaningful only for Block

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Exponent vector of a monomial; the variable count is fixed by the ring.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(exp.size()); }
    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    bool is_one() const {
        return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i) r.exp[i] += b.exp[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    // a / b, assuming b | a
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i) r.exp[i] -= b.exp[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i) r.exp[i] = std::max(r.exp[i], b.exp[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp[i] > 0 && b.exp[i] > 0) return false;
    return true;
}

namespace detail {

inline std::strong_ordering grevlex_range(const Monomial& u, const Monomial& v, int lo, int hi) {
    int du = 0, dv = 0;
    for (int i = lo; i < hi; ++i) {
        du += u.exp[i];
        dv += v.exp[i];
    }
    if (du != dv) return du <=> dv;
    // Equal degree: the later the first difference from the right, the larger;
    // u > v iff the last nonzero entry of u - v is negative.
    for (int i = hi - 1; i >= lo; --i) {
        if (u.exp[i] != v.exp[i])
            return u.exp[i] < v.exp[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering lex_range(const Monomial& u, const Monomial& v, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        if (u.exp[i] != v.exp[i]) return u.exp[i] <=> v.exp[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace detail

/// Total, multiplicative, well-founded comparison of monomials.
inline std::strong_ordering monomial_compare(const Monomial& u, const Monomial& v,
                                             const MonomialOrder& order) {
    if (u.nvars() != v.nvars())
        throw RingMismatchError("monomial_compare: exponent vectors of different length");
    const int n = u.nvars();
    switch (order.kind) {
        case OrderKind::Grevlex:
            return detail::grevlex_range(u, v, 0, n);
        case OrderKind::Lex:
            return detail::lex_range(u, v, 0, n);
        case OrderKind::Block: {
            const int s = std::clamp(order.block_split, 0, n);
            auto c = detail::grevlex_range(u, v, 0, s);
            if (c != std::strong_ordering::equal) return c;
            return detail::grevlex_range(u, v, s, n);
        }
    }
    return std::strong_ordering::equal;
}

/// The ambient polynomial ring: named variables plus a monomial order.
struct RingSpec {
    std::vector<std::string> vars;
    MonomialOrder order;

    int nvars() const { return static_cast<int>(vars.size()); }

    /// Index of a variable name, or -1.
    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order = {}) {
    if (vars.empty()) throw InvalidInputError("ring must have at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw InvalidInputError("empty variable name");
        if (!seen.insert(v).second) throw InvalidInputError("duplicate variable name: " + v);
    }
    if (order.kind == OrderKind::Block &&
        (order.block_split < 0 || order.block_split > static_cast<int>(vars.size())))
        throw InvalidInputError("block order split out of range");
    return std::make_shared<const RingSpec>(RingSpec{std::move(vars), order});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a && b && *a == *b;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b)) throw RingMismatchError(std::string(where) + ": ring mismatch");
}

}  // namespace saito
