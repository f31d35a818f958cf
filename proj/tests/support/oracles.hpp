// Test-side oracles, kept independent of the Gröbner solve path: dense
// rational linear algebra for degree-bounded brute force, a permutation
// determinant, and seeded random generators.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "saito/saito.hpp"

namespace oracle {

using namespace saito;

// ---------- dense rational linear algebra ----------

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns the pivot column of each row.
inline std::vector<int> rref(Matrix& A) {
    std::vector<int> pivots;
    if (A.empty()) return pivots;
    const int rows = static_cast<int>(A.size());
    const int cols = static_cast<int>(A[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(A[i][c]) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(A[r], A[pivot]);
        Rational inv = Rational(1) / A[r][c];
        for (auto& v : A[r]) v = v * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(A[i][c]) == 0) continue;
            Rational f = A[i][c];
            for (int j = 0; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// One solution of A x = b (free variables set to zero), or nullopt.
inline std::optional<Row> solve(const Matrix& A, const Row& b) {
    if (A.empty()) {
        for (const auto& v : b)
            if (sgn(v) != 0) return std::nullopt;
        return Row{};
    }
    const int cols = static_cast<int>(A[0].size());
    Matrix aug = A;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    std::vector<int> pivots = rref(aug);
    for (std::size_t i = pivots.size(); i < aug.size(); ++i)
        if (sgn(aug[i][cols]) != 0) return std::nullopt;  // 0 = nonzero
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Row x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

/// Basis of the nullspace of A (cols inferred from the first row).
inline std::vector<Row> nullspace(Matrix A) {
    if (A.empty()) return {};
    const int cols = static_cast<int>(A[0].size());
    std::vector<int> pivots = rref(A);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------- monomial enumeration ----------

inline void monomials_rec(int nvars, int maxdeg, int i, Monomial& cur,
                          std::vector<Monomial>& out) {
    if (i == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e + cur.degree() <= maxdeg; ++e) {
        cur.exp[i] = e;
        monomials_rec(nvars, maxdeg, i + 1, cur, out);
    }
    cur.exp[i] = 0;
}

inline std::vector<Monomial> monomials_up_to(const RingPtr& ring, int maxdeg) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(ring->nvars());
    monomials_rec(ring->nvars(), maxdeg, 0, cur, out);
    return out;
}

// ---------- brute-force division oracle ----------
// Searches for gammas whose coefficients have degree <= deg_bound by exact
// linear algebra over the rational coefficient space; complete at its bound.

inline std::optional<std::vector<ExteriorForm>> brute_force_divide(
    const std::vector<ExteriorForm>& omegas, const ExteriorForm& eta, const QuotientContext& ctx,
    int deg_bound) {
    const RingPtr& ring = eta.ring();
    const int m = eta.rank();
    const int p = eta.degree();
    const int k = static_cast<int>(omegas.size());
    auto gtuples = all_tuples(m, p - 1);
    auto monos = monomials_up_to(ring, deg_bound);

    struct Unknown {
        int j;
        IndexTuple t;
        Monomial mu;
    };
    std::vector<Unknown> unknowns;
    std::vector<ExteriorForm> images;  // NF mod J of omega_j ^ (mu e_t)
    for (int j = 0; j < k; ++j)
        for (const auto& t : gtuples)
            for (const auto& mu : monos) {
                ExteriorForm basis = ExteriorForm::from_terms(
                    ring, m, p - 1, {{t, Polynomial::monomial(ring, mu, Rational(1))}});
                images.push_back(form_nf(wedge(omegas[j], basis), ctx.J));
                unknowns.push_back({j, t, mu});
            }
    ExteriorForm rhs = form_nf(eta, ctx.J);

    // row index: (tuple rank, monomial) pairs present in any image or the rhs
    std::map<std::pair<int, std::vector<int>>, int> rowix;
    auto touch = [&](const ExteriorForm& f) {
        for (const auto& [t, c] : f.terms())
            for (const auto& term : c.terms()) {
                auto key = std::make_pair(colex_rank(t), term.mono.exp);
                rowix.try_emplace(key, static_cast<int>(rowix.size()));
            }
    };
    for (const auto& f : images) touch(f);
    touch(rhs);

    const int nrows = static_cast<int>(rowix.size());
    const int ncols = static_cast<int>(unknowns.size());
    Matrix A(nrows, Row(ncols, Rational(0)));
    Row b(nrows, Rational(0));
    for (int u = 0; u < ncols; ++u)
        for (const auto& [t, c] : images[u].terms())
            for (const auto& term : c.terms())
                A[rowix[{colex_rank(t), term.mono.exp}]][u] = term.coeff;
    for (const auto& [t, c] : rhs.terms())
        for (const auto& term : c.terms())
            b[rowix[{colex_rank(t), term.mono.exp}]] = term.coeff;

    auto x = nrows ? solve(A, b) : std::optional<Row>(Row(ncols, Rational(0)));
    if (!x) return std::nullopt;
    std::vector<ExteriorForm::TermList> parts(k);
    for (int u = 0; u < ncols; ++u) {
        if (sgn((*x)[u]) == 0) continue;
        parts[unknowns[u].j].push_back(
            {unknowns[u].t, Polynomial::monomial(ring, unknowns[u].mu, (*x)[u])});
    }
    std::vector<ExteriorForm> gammas;
    for (int j = 0; j < k; ++j)
        gammas.push_back(ExteriorForm::from_terms(ring, m, std::max(p - 1, 0), parts[j]));
    if (!form_zero_mod(eta - apply_A(omegas, gammas), ctx.J)) return std::nullopt;
    return gammas;
}

// ---------- permutation determinant ----------

inline Polynomial det_by_permutations(const std::vector<std::vector<Polynomial>>& M,
                                      const RingPtr& ring) {
    const int n = static_cast<int>(M.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Polynomial acc = Polynomial::zero(ring);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Polynomial prod = Polynomial::constant(ring, 1);
        for (int i = 0; i < n; ++i) prod = prod * M[i][perm[i]];
        acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// ---------- seeded random data ----------

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    int pick(int lo, int hi) { return lo + static_cast<int>(g() % (hi - lo + 1)); }
};

inline Polynomial random_poly(Rng& rng, const RingPtr& ring, int maxdeg, int nterms,
                              int coeff_range = 3, bool allow_zero = true) {
    std::vector<Term> ts;
    for (int t = 0; t < nterms; ++t) {
        Monomial m = Monomial::one(ring->nvars());
        int budget = rng.pick(0, maxdeg);
        for (int d = 0; d < budget; ++d) m.exp[rng.pick(0, ring->nvars() - 1)] += 1;
        int c = rng.pick(-coeff_range, coeff_range);
        if (c != 0) ts.push_back({m, Rational(c)});
    }
    Polynomial p = Polynomial::from_terms(ring, ts);
    if (!allow_zero && p.is_zero()) return Polynomial::constant(ring, 1);
    return p;
}

inline ExteriorForm random_form(Rng& rng, const RingPtr& ring, int m, int p, int maxdeg,
                                int nterms) {
    auto tuples = all_tuples(m, p);
    ExteriorForm::TermList ts;
    for (int t = 0; t < nterms; ++t) {
        const IndexTuple& tup = tuples[rng.pick(0, static_cast<int>(tuples.size()) - 1)];
        ts.push_back({tup, random_poly(rng, ring, maxdeg, 2)});
    }
    return ExteriorForm::from_terms(ring, m, p, ts);
}

// ---------- inductive trace verification ----------
// Walks the recursion tree, re-verifying every recorded relation at its own
// ring level; returns false on the first violation.

inline bool trace_ok(const TraceNode& node, const std::vector<ExteriorForm>& omegas,
                     const RingPtr& R) {
    Ideal J(R, node.level_quotient);
    if (static_cast<int>(omegas.size()) != node.k) return false;
    if (node.kind != TraceNode::Kind::Step) return form_zero_mod(node.eta, J);

    Polynomial apow = poly_pow(node.a, node.n);
    if (!form_zero_mod(apow * node.eta - apply_A(omegas, node.star_gammas), J)) return false;
    for (int j = 0; j < node.k; ++j)
        if (!form_zero_mod(
                node.star_gammas[j] - apply_A(omegas, node.xis[j]) - apow * node.zetas[j], J))
            return false;
    if (!form_zero_mod(node.eta - apply_A(omegas, node.gammas), J)) return false;

    if (node.children.size() != static_cast<std::size_t>(node.k + (node.k >= 2 ? 1 : 0)))
        return false;
    Ideal J2 = ideal_sum(J, {apow});
    for (int j = 0; j < node.k; ++j) {
        const TraceNode& child = node.children[j];
        if (child.p != node.p - 1) return false;
        if (!ideal_equal(Ideal(R, child.level_quotient), J2)) return false;
        if (!form_zero_mod(child.eta - node.star_gammas[j], J2)) return false;
        if (!trace_ok(child, omegas, R)) return false;
    }
    if (node.k >= 2) {
        const TraceNode& child = node.children.back();
        if (child.p != node.p || child.k != node.k - 1) return false;
        if (!ideal_equal(Ideal(R, child.level_quotient), J)) return false;
        ExteriorForm etap = node.eta - apply_A(omegas, node.zetas);
        if (!form_zero_mod(child.eta - etap, J)) return false;
        std::vector<ExteriorForm> rest(omegas.begin() + 1, omegas.end());
        if (!trace_ok(child, rest, R)) return false;
    }
    return true;
}

}  // namespace oracle
