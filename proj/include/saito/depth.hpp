#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "saito/exterior.hpp"
#include "saito/groebner.hpp"

namespace saito {

/// Ambient ring for a computation: the polynomial ring itself (J = 0) or
/// the quotient R/J. All quotient arithmetic goes through normal forms
/// against J's cached basis.
struct QuotientContext {
    RingPtr ring;
    Ideal J;

    static QuotientContext polynomial(RingPtr r) {
        Ideal zero(r, {});
        return QuotientContext{std::move(r), std::move(zero)};
    }

    static QuotientContext modulo(Ideal J) {
        if (J.is_unit()) throw InvalidInputError("quotient by the unit ideal");
        RingPtr r = J.ring();
        return QuotientContext{std::move(r), std::move(J)};
    }

    bool trivial() const { return J.generators().empty() || J.is_zero_ideal(); }
};

struct RegSeqCheck {
    bool regular = false;
    // 1-based index of the first failing element; 0 when the sequence fails
    // by generating an improper ideal; -1 when regular.
    int failing_index = -1;
};

/// A sequence a_1..a_r is regular on R/J when J + (a_1..a_r) is proper and
/// each a_i is a non-zero-divisor modulo J + (a_1..a_{i-1}), i.e. the ideal
/// quotient by a_i changes nothing.
inline RegSeqCheck is_regular_sequence(const std::vector<Polynomial>& seq,
                                       const QuotientContext& ctx) {
    if (seq.empty()) throw InvalidInputError("is_regular_sequence: empty sequence");
    if (ideal_sum(ctx.J, seq).is_unit()) return {false, 0};
    Ideal K = ctx.J;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Polynomial& a = seq[i];
        if (a.is_zero() || K.contains(a)) return {false, static_cast<int>(i) + 1};
        if (!ideal_equal(ideal_quotient(K, a), K)) return {false, static_cast<int>(i) + 1};
        K = ideal_sum(K, {a});
    }
    return {true, -1};
}

/// Depth value with the +infinity sentinel of the unit ideal.
struct Depth {
    bool infinite = false;
    int value = 0;

    static Depth inf() { return {true, 0}; }
    static Depth of(int v) { return {false, v}; }

    bool exceeds(int p) const { return infinite || value > p; }

    std::string str() const { return infinite ? "infinity" : std::to_string(value); }

    friend bool operator==(const Depth&, const Depth&) = default;
};

enum class DepthMethod { DimensionFormula, KoszulGrade, SequenceSearch };

struct DepthReport {
    Depth depth;
    DepthMethod method = DepthMethod::DimensionFormula;
    std::vector<Polynomial> witness;  // regular sequence of length = depth (finite, nonzero)
};

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr int kSearchBudgetPerLevel = 200;

/// Searches for a regular sequence of the requested length inside I (mod
/// ctx.J): generators first, then random small-integer combinations of the
/// generators, with limited backtracking. Failure is a budget report, not a
/// proof of nonexistence.
inline std::optional<std::vector<Polynomial>> find_regular_sequence(
    const Ideal& I, const QuotientContext& ctx, int target_len,
    std::uint64_t seed = kDefaultSeed, int budget_per_level = kSearchBudgetPerLevel) {
    if (target_len <= 0) return std::vector<Polynomial>{};
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) return std::nullopt;

    std::mt19937_64 rng(seed);
    long nodes = static_cast<long>(budget_per_level) * target_len * 4;

    auto random_combo = [&]() {
        Polynomial c = Polynomial::zero(I.ring());
        for (const auto& g : gens) {
            int lam = static_cast<int>(rng() % 5) - 2;  // {-2..2}
            if (lam != 0) c = c + g * Rational(lam);
        }
        return c;
    };

    std::vector<Polynomial> acc;
    auto dfs = [&](auto&& self, const Ideal& K) -> bool {
        if (static_cast<int>(acc.size()) == target_len) return true;
        int attempts = 0;
        auto try_candidate = [&](const Polynomial& c) -> bool {
            if (nodes-- <= 0) return false;
            if (c.is_zero() || K.contains(c)) return false;
            Ideal Kc = ideal_sum(K, {c});
            if (Kc.is_unit()) return false;
            if (!ideal_equal(ideal_quotient(K, c), K)) return false;
            acc.push_back(c);
            if (self(self, Kc)) return true;
            acc.pop_back();
            return false;
        };
        for (const auto& g : gens) {
            if (attempts++ >= budget_per_level || nodes <= 0) return false;
            if (try_candidate(g)) return true;
        }
        while (attempts++ < budget_per_level && nodes > 0) {
            if (try_candidate(random_combo())) return true;
        }
        return false;
    };
    if (dfs(dfs, ctx.J)) return acc;
    return std::nullopt;
}

/// Depth over the polynomial ring via the codimension formula
/// depth I = n - dim(R/I); conventions: zero ideal -> 0, unit ideal -> inf.
inline DepthReport depth_via_dim(const Ideal& I) {
    DepthReport rep;
    rep.method = DepthMethod::DimensionFormula;
    if (I.is_zero_ideal()) {
        rep.depth = Depth::of(0);
        return rep;
    }
    if (I.is_unit()) {
        rep.depth = Depth::inf();
        return rep;
    }
    const int n = I.ring()->nvars();
    rep.depth = Depth::of(n - krull_dim(I));
    if (rep.depth.value > 0) {
        auto w = find_regular_sequence(I, QuotientContext::polynomial(I.ring()), rep.depth.value);
        if (w) rep.witness = std::move(*w);
    }
    return rep;
}

namespace detail {

/// Matrix columns of the Koszul differential d_j : /\^j R^r -> /\^(j-1) R^r,
/// d(e_S) = sum_t (-1)^(t+1) a_{S_t} e_{S minus S_t}, as module vectors of
/// rank C(r, j-1).
inline std::vector<ModuleVector> koszul_differential(const std::vector<Polynomial>& a, int j,
                                                     const RingPtr& ring) {
    const int r = static_cast<int>(a.size());
    auto rows = all_tuples(r, j - 1);
    auto cols = all_tuples(r, j);
    std::vector<ModuleVector> out;
    out.reserve(cols.size());
    for (const auto& S : cols) {
        ModuleVector v = ModuleVector::zero(ring, static_cast<int>(rows.size()));
        for (std::size_t t = 0; t < S.size(); ++t) {
            IndexTuple rest;
            for (std::size_t u = 0; u < S.size(); ++u)
                if (u != t) rest.push_back(S[u]);
            Polynomial c = a[S[t] - 1];
            if (t % 2 == 1) c = -c;
            v.comps[colex_rank(rest)] = v.comps[colex_rank(rest)] + c;
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Kernel generators of a matrix map modulo J: syzygies of the columns
/// augmented with J multiples of the target basis, restricted to the
/// column block.
inline std::vector<ModuleVector> kernel_mod(const std::vector<ModuleVector>& cols, int target_rank,
                                            const Ideal& J, const RingPtr& ring) {
    std::vector<ModuleVector> gens = cols;
    for (const auto& h : J.generators()) {
        if (h.is_zero()) continue;
        for (int t = 0; t < target_rank; ++t) {
            ModuleVector v = ModuleVector::zero(ring, target_rank);
            v.comps[t] = h;
            gens.push_back(std::move(v));
        }
    }
    auto syz = module_syzygies(gens);
    std::vector<ModuleVector> out;
    const int nc = static_cast<int>(cols.size());
    for (const auto& s : syz) {
        ModuleVector v = ModuleVector::zero(ring, nc);
        for (int c = 0; c < nc; ++c) v.comps[c] = s.comps[c];
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

/// Does the j-th Koszul homology of (a_1..a_r) over R/J vanish? Tested by
/// lifting every kernel generator of d_j through d_(j+1) modulo J.
inline bool koszul_h_nonzero(const std::vector<Polynomial>& a, int j, const Ideal& J,
                             const RingPtr& ring) {
    const int r = static_cast<int>(a.size());
    const int rank_j = static_cast<int>(binom(r, j));

    auto dj = koszul_differential(a, j, ring);
    auto kernel = kernel_mod(dj, static_cast<int>(binom(r, j - 1)), J, ring);
    if (kernel.empty()) return false;

    std::vector<ModuleVector> image = (j + 1 <= r) ? koszul_differential(a, j + 1, ring)
                                                   : std::vector<ModuleVector>{};
    for (const auto& h : J.generators()) {
        if (h.is_zero()) continue;
        for (int t = 0; t < rank_j; ++t) {
            ModuleVector v = ModuleVector::zero(ring, rank_j);
            v.comps[t] = h;
            image.push_back(std::move(v));
        }
    }
    ModuleGB gb = module_groebner(image);
    for (const auto& z : kernel) {
        if (!module_normal_form(z, gb).remainder.is_zero()) return true;
    }
    return false;
}

}  // namespace detail

/// Grade of I on R/J via Koszul homology of a generating set:
/// grade = r - max{j : H_j != 0}. Valid over quotient rings, where the
/// dimension shortcut is not.
inline DepthReport grade_via_koszul(const Ideal& I, const QuotientContext& ctx) {
    DepthReport rep;
    rep.method = DepthMethod::KoszulGrade;
    if (ideal_sum(ctx.J, I.generators()).is_unit()) {
        rep.depth = Depth::inf();
        return rep;
    }
    std::vector<Polynomial> a;
    for (const auto& g : I.generators()) {
        Polynomial r = ctx.J.normal_form(g);
        if (!r.is_zero()) a.push_back(std::move(r));
    }
    if (a.empty()) {
        rep.depth = Depth::of(0);  // image is the zero ideal
        return rep;
    }
    const int r = static_cast<int>(a.size());
    int grade = r;
    for (int j = r; j >= 1; --j) {
        if (detail::koszul_h_nonzero(a, j, ctx.J, ctx.ring)) {
            grade = r - j;
            break;
        }
    }
    rep.depth = Depth::of(grade);
    if (grade > 0) {
        auto w = find_regular_sequence(I, ctx, grade);
        if (w) rep.witness = std::move(*w);
    }
    return rep;
}

}  // namespace saito
