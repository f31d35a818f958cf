#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "saito/depth.hpp"
#include "saito/exterior.hpp"
#include "saito/parser.hpp"

namespace saito {

enum class DivisionStatus { Solved, NoSolution, InconclusiveBudget };

/// One level of the inductive construction. Every recorded relation
/// re-verifies exactly modulo the recorded level quotient.
struct TraceNode {
    enum class Kind { BaseKZero, BasePZero, Step };

    Kind kind = Kind::Step;
    int p = 0;
    int k = 0;
    std::vector<Polynomial> level_quotient;  // generators of the ambient ideal at this level
    ExteriorForm eta;

    // Step data: a^n eta = sum_j omega_j ^ star_gammas[j]  (mod level quotient)
    Polynomial a;
    int n = 0, n1 = 0, n2 = 0;
    std::vector<ExteriorForm> star_gammas;
    std::vector<std::vector<ExteriorForm>> xis;  // xis[j][i], degree p-2, over the extended quotient
    std::vector<ExteriorForm> zetas;             // star_gammas[j] = sum_i omega_i^xis[j][i] + a^n zetas[j]
    std::vector<ExteriorForm> thetas;            // from the (p, k-1) recursion, k >= 2

    std::vector<ExteriorForm> gammas;  // solution at this level
    std::vector<TraceNode> children;   // k children at (p-1,k), then one at (p,k-1) when k >= 2
};

struct InductiveTrace {
    TraceNode root;
};

struct DivisionResult {
    DivisionStatus status = DivisionStatus::NoSolution;
    std::vector<ExteriorForm> gammas;  // k forms of degree p-1, when solved
    ModuleVector obstruction;          // nonzero module normal form, when no solution
    std::optional<InductiveTrace> trace;
};

namespace detail {

struct BudgetError : Error {
    using Error::Error;
};

/// Shared machinery for membership of eta in im A + J*(ambient basis): the
/// generator module is fixed by (omegas, p, J), so the tracked basis is
/// computed once and reused across targets.
class DivisionEngine {
public:
    DivisionEngine(RingPtr ring, int m, std::vector<ExteriorForm> omegas, int p,
                   const QuotientContext& ctx)
        : ring_(std::move(ring)), m_(m), p_(p), omegas_(std::move(omegas)), J_(ctx.J) {
        tuples_ = all_tuples(m_, p_ - 1);
        for (const auto& w : omegas_)
            for (const auto& t : tuples_)
                gens_.push_back(flatten(wedge(w, ExteriorForm::basis(ring_, m_, t))));
        const int target_rank = static_cast<int>(binom(m_, p_));
        for (const auto& h : J_.generators()) {
            if (h.is_zero()) continue;
            for (int u = 0; u < target_rank; ++u) {
                ModuleVector v = ModuleVector::zero(ring_, target_rank);
                v.comps[u] = h;
                gens_.push_back(std::move(v));
            }
        }
    }

    DivisionResult solve(const ExteriorForm& eta) const {
        DivisionResult out;
        ModuleVector target = flatten(eta);
        const ModuleGB& gb = basis();
        ModuleNF nf = module_normal_form(target, gb, /*track=*/true);
        if (!nf.remainder.is_zero()) {
            out.status = DivisionStatus::NoSolution;
            out.obstruction = std::move(nf.remainder);
            return out;
        }
        // compose cofactors back onto the A-columns and read off the gammas
        const int k = static_cast<int>(omegas_.size());
        const int nt = static_cast<int>(tuples_.size());
        std::vector<Polynomial> cof(gens_.size(), Polynomial::zero(ring_));
        for (std::size_t b = 0; b < gb.basis.size(); ++b) {
            if (nf.cofactors[b].is_zero()) continue;
            for (std::size_t g = 0; g < gens_.size(); ++g)
                cof[g] = cof[g] + nf.cofactors[b] * gb.transform[b][g];
        }
        out.gammas.reserve(k);
        for (int j = 0; j < k; ++j) {
            ExteriorForm::TermList ts;
            for (int t = 0; t < nt; ++t) {
                const Polynomial& c = cof[static_cast<std::size_t>(j) * nt + t];
                if (!c.is_zero()) ts.push_back({tuples_[t], c});
            }
            out.gammas.push_back(
                ExteriorForm::from_terms(ring_, m_, std::max(p_ - 1, 0), ts));
        }
        // certificate must re-verify exactly (mod J)
        ExteriorForm recon = omegas_.empty() ? ExteriorForm::zero(ring_, m_, p_)
                                             : apply_A(omegas_, out.gammas);
        if (!form_zero_mod(eta - recon, J_))
            throw Error("divide: solution failed to re-verify");
        out.status = DivisionStatus::Solved;
        return out;
    }

private:
    const ModuleGB& basis() const {
        std::call_once(cache_->flag, [this] { cache_->gb = module_groebner(gens_, true); });
        return cache_->gb;
    }

    struct Cache {
        std::once_flag flag;
        ModuleGB gb;
    };

    RingPtr ring_;
    int m_ = 0, p_ = 0;
    std::vector<ExteriorForm> omegas_;
    Ideal J_;
    std::vector<IndexTuple> tuples_;
    std::vector<ModuleVector> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline void validate_division_input(const std::vector<ExteriorForm>& omegas,
                                    const ExteriorForm& eta, const ExteriorForm& Omega,
                                    const QuotientContext& ctx) {
    for (const auto& w : omegas) {
        require_same_ring(w.ring(), eta.ring(), "divide");
        if (w.rank() != eta.rank()) throw RingMismatchError("divide: rank mismatch");
        if (w.degree() != 1) throw InvalidInputError("divide: omegas must be 1-forms");
    }
    ExteriorForm prod = apply_B(Omega, eta);
    if (!form_zero_mod(prod, ctx.J))
        throw InvalidInputError("Omega ^ eta is nonzero mod the quotient: " +
                                to_string(form_nf(prod, ctx.J)));
}

}  // namespace detail

/// Decides whether eta lies in the image of A (modulo the ambient quotient)
/// by a Gröbner module lift, independent of any depth hypothesis. Solved
/// results carry re-verified gammas; failures carry the nonzero normal form
/// as an obstruction certificate.
inline DivisionResult divide(const std::vector<ExteriorForm>& omegas, const ExteriorForm& eta,
                             const QuotientContext& ctx) {
    ExteriorForm Omega = omega_of(omegas, eta.ring(), eta.rank()).Omega;
    detail::validate_division_input(omegas, eta, Omega, ctx);
    detail::DivisionEngine engine(eta.ring(), eta.rank(), omegas, eta.degree(), ctx);
    return engine.solve(eta);
}

struct LocalizeResult {
    DivisionStatus status = DivisionStatus::InconclusiveBudget;
    int n = -1;
    std::vector<ExteriorForm> gammas;
};

/// Finds the least n <= cap with a^n * eta in im A (mod J), ascending from
/// n = 0. Requires a to lie in I(Omega) (mod J).
inline LocalizeResult localize_divide(const Polynomial& a,
                                      const std::vector<ExteriorForm>& omegas,
                                      const ExteriorForm& eta, const QuotientContext& ctx,
                                      int n_cap = 32) {
    OmegaPackage pkg = omega_of(omegas, eta.ring(), eta.rank());
    detail::validate_division_input(omegas, eta, pkg.Omega, ctx);
    if (!ideal_sum(pkg.coefficients, ctx.J).contains(a))
        throw InvalidInputError("localize_divide: element does not lie in I(Omega) mod J");
    detail::DivisionEngine engine(eta.ring(), eta.rank(), omegas, eta.degree(), ctx);
    LocalizeResult out;
    ExteriorForm power = eta;
    for (int n = 0; n <= n_cap; ++n) {
        DivisionResult r = engine.solve(power);
        if (r.status == DivisionStatus::Solved) {
            out.status = DivisionStatus::Solved;
            out.n = n;
            out.gammas = std::move(r.gammas);
            return out;
        }
        power = a * power;
    }
    return out;  // budget exhausted
}

namespace detail {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline PolyMatrix pm_minor(const PolyMatrix& M, int skip_row, int skip_col) {
    PolyMatrix out;
    for (int i = 0; i < static_cast<int>(M.size()); ++i) {
        if (i == skip_row) continue;
        std::vector<Polynomial> row;
        for (int j = 0; j < static_cast<int>(M.size()); ++j) {
            if (j == skip_col) continue;
            row.push_back(M[i][j]);
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline Polynomial pm_det(const PolyMatrix& M, const RingPtr& ring) {
    const int n = static_cast<int>(M.size());
    if (n == 0) return Polynomial::constant(ring, 1);
    if (n == 1) return M[0][0];
    Polynomial acc = Polynomial::zero(ring);
    for (int j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        Polynomial sub = pm_det(pm_minor(M, 0, j), ring);
        Polynomial term = M[0][j] * sub;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline PolyMatrix pm_adjugate(const PolyMatrix& M, const RingPtr& ring) {
    const int n = static_cast<int>(M.size());
    PolyMatrix adj(n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Polynomial c = pm_det(pm_minor(M, j, i), ring);
            adj[i][j] = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

struct Lemma22Result {
    int n = 0, n1 = 0, n2 = 0;
    std::vector<ExteriorForm> gammas;
};

/// The localization argument made fraction-free for an element that is
/// (mod J) an actual coefficient a_T of Omega: complete the omegas with the
/// standard basis vectors off T, invert the completed matrix by its
/// adjugate, and clear the single denominator det = ±a_T. Over the
/// polynomial ring the pure-completion coordinates vanish exactly (n2 = 0);
/// over a quotient they die after n2 more powers, found by ascent.
inline Lemma22Result lemma22_minor(const Polynomial& a, const IndexTuple& T,
                                   const Polynomial& a_T,
                                   const std::vector<ExteriorForm>& omegas,
                                   const ExteriorForm& eta, const QuotientContext& ctx, int cap) {
    const RingPtr& ring = eta.ring();
    const int m = eta.rank();
    const int k = static_cast<int>(omegas.size());
    const int p = eta.degree();

    // completed matrix: omega columns, then unit columns at rows off T
    PolyMatrix M(m, std::vector<Polynomial>(m, Polynomial::zero(ring)));
    for (int j = 0; j < k; ++j)
        for (const auto& [t, c] : omegas[j].terms()) M[t[0] - 1][j] = c;
    std::vector<int> complement;
    for (int i = 1; i <= m; ++i)
        if (std::find(T.begin(), T.end(), i) == T.end()) complement.push_back(i);
    for (int u = 0; u < static_cast<int>(complement.size()); ++u)
        M[complement[u] - 1][k + u] = Polynomial::constant(ring, 1);

    Polynomial D = pm_det(M, ring);
    int s;
    if (D == a_T)
        s = 1;
    else if (D == -a_T)
        s = -1;
    else
        throw Error("lemma22: completed determinant is not the chosen coefficient");

    PolyMatrix adj = pm_adjugate(M, ring);

    // eta in the completed basis: D^p eta = sum_V h_V b_V
    auto Vtuples = all_tuples(m, p);
    std::vector<Polynomial> h(Vtuples.size(), Polynomial::zero(ring));
    for (std::size_t vi = 0; vi < Vtuples.size(); ++vi) {
        const IndexTuple& V = Vtuples[vi];
        for (const auto& [U, g] : eta.terms()) {
            PolyMatrix sub(p, std::vector<Polynomial>(p, Polynomial::zero(ring)));
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c) sub[r][c] = adj[V[r] - 1][U[c] - 1];
            h[vi] = h[vi] + g * pm_det(sub, ring);
        }
    }

    // pure-completion coordinates must vanish (after n2 powers, mod J);
    // p >= 1 here, so V is never empty and pure means V[0] > k
    int n2 = 0;
    if (ctx.trivial()) {
        for (std::size_t vi = 0; vi < Vtuples.size(); ++vi)
            if (Vtuples[vi][0] > k && !h[vi].is_zero())
                throw Error("lemma22: pure coordinate nonzero over the base ring");
    } else {
        for (;; ++n2) {
            if (n2 > cap) throw BudgetError("lemma22: exponent cap exhausted");
            Polynomial Dn = poly_pow(D, n2);
            bool ok = true;
            for (std::size_t vi = 0; vi < Vtuples.size(); ++vi) {
                if (Vtuples[vi][0] <= k) continue;
                if (!ctx.J.contains(Dn * h[vi])) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
    }

    // column l of M as a 1-form
    std::vector<ExteriorForm> col_form;
    for (int l = 0; l < m; ++l) {
        ExteriorForm::TermList ts;
        for (int i = 0; i < m; ++i)
            if (!M[i][l].is_zero()) ts.push_back({IndexTuple{i + 1}, M[i][l]});
        col_form.push_back(ExteriorForm::from_terms(ring, m, 1, ts));
    }

    Lemma22Result out;
    out.n1 = p;
    out.n2 = n2;
    out.n = p + n2;
    Polynomial Dn2 = poly_pow(D, n2);
    out.gammas.assign(k, ExteriorForm::zero(ring, m, std::max(p - 1, 0)));
    for (std::size_t vi = 0; vi < Vtuples.size(); ++vi) {
        const IndexTuple& V = Vtuples[vi];
        if (V[0] > k || h[vi].is_zero()) continue;
        int jstar = V[0];  // smallest omega column; extraction sign is +1
        ExteriorForm rest = ExteriorForm::scalar(ring, m, Polynomial::constant(ring, 1));
        for (std::size_t t = 1; t < V.size(); ++t) rest = wedge(rest, col_form[V[t] - 1]);
        out.gammas[jstar - 1] = out.gammas[jstar - 1] + (Dn2 * h[vi]) * rest;
    }
    if (s == -1 && out.n % 2 == 1)
        for (auto& g : out.gammas) g = -g;

    ExteriorForm check = poly_pow(a, out.n) * eta - apply_A(omegas, out.gammas);
    if (!form_zero_mod(check, ctx.J)) throw Error("lemma22: relation failed to re-verify");
    return out;
}

/// Constructive form of the localization lemma for an arbitrary element of
/// I(Omega) (mod J): express it over the coefficients of Omega, solve for
/// each coefficient by the minor construction, and recombine through the
/// multinomial expansion of the power.
inline Lemma22Result lemma22_construct(const Polynomial& a,
                                       const std::vector<ExteriorForm>& omegas,
                                       const ExteriorForm& Omega, const ExteriorForm& eta,
                                       const QuotientContext& ctx, int cap) {
    const RingPtr& ring = eta.ring();
    const int m = eta.rank();
    const int k = static_cast<int>(omegas.size());
    const int p = eta.degree();

    if (form_zero_mod(eta, ctx.J)) {
        Lemma22Result out;
        out.gammas.assign(k, ExteriorForm::zero(ring, m, std::max(p - 1, 0)));
        return out;
    }

    // direct minor path when a is (mod J) a coefficient of Omega
    std::optional<std::size_t> chosen;
    for (std::size_t ti = 0; ti < Omega.terms().size(); ++ti) {
        const auto& [T, c] = Omega.terms()[ti];
        if (!ctx.J.contains(a - c)) continue;
        if (!chosen) {
            chosen = ti;
            continue;
        }
        const auto& [pt, pc] = Omega.terms()[*chosen];
        // prefer lowest total degree, then the smaller leading monomial
        if (c.total_degree() < pc.total_degree() ||
            (c.total_degree() == pc.total_degree() &&
             monomial_compare(c.leading().mono, pc.leading().mono, ring->order) ==
                 std::strong_ordering::less))
            chosen = ti;
    }
    if (chosen)
        return lemma22_minor(a, Omega.terms()[*chosen].first, Omega.terms()[*chosen].second,
                             omegas, eta, ctx, cap);

    // general element: a = sum_T c_T a_T (mod J)
    std::vector<Polynomial> lift_gens = ctx.J.generators();
    const std::size_t ncoef = Omega.terms().size();
    for (const auto& [T, c] : Omega.terms()) lift_gens.push_back(c);
    IdealLift lift = ideal_member_with_lift(a, Ideal(ring, lift_gens));
    if (!lift.residual.is_zero())
        throw Error("lemma22: element does not lie in I(Omega) mod J");

    struct Piece {
        Polynomial c_T;  // cofactor
        Polynomial a_T;  // coefficient of Omega
        Lemma22Result sub;
    };
    std::vector<Piece> pieces;
    const std::size_t joff = ctx.J.generators().size();
    for (std::size_t t = 0; t < ncoef; ++t) {
        const Polynomial& c = lift.cofactors[joff + t];
        if (c.is_zero()) continue;
        const auto& [T, aT] = Omega.terms()[t];
        Lemma22Result sub = lemma22_minor(aT, T, aT, omegas, eta, ctx, cap);
        pieces.push_back({c, aT, std::move(sub)});
    }
    if (pieces.empty()) throw Error("lemma22: empty decomposition");

    int nprime = 1;
    for (const auto& pc : pieces) nprime += pc.sub.n - 1;

    Lemma22Result out;
    out.n = nprime;
    out.n1 = nprime;
    out.n2 = 0;
    out.gammas.assign(k, ExteriorForm::zero(ring, m, std::max(p - 1, 0)));

    // every multinomial term of (sum_T c_T a_T)^nprime carries some
    // a_T^(m_T) with m_T >= sub.n, so each term divides through one piece
    const int N = static_cast<int>(pieces.size());
    std::vector<int> mexp(N, 0);
    auto factorial = [](int v) {
        Integer f = 1;
        for (int i = 2; i <= v; ++i) f *= i;
        return f;
    };
    Integer nfact = factorial(nprime);
    auto emit = [&]() {
        int tstar = -1;
        for (int t = 0; t < N; ++t)
            if (mexp[t] >= pieces[t].sub.n) {
                tstar = t;
                break;
            }
        if (tstar < 0) throw Error("lemma22: pigeonhole failed");
        Integer denom = 1;
        for (int t = 0; t < N; ++t) denom *= factorial(mexp[t]);
        Polynomial scalar = Polynomial::constant(ring, Rational(nfact / denom));
        for (int t = 0; t < N; ++t) {
            scalar = scalar * poly_pow(pieces[t].c_T, mexp[t]);
            int apow = (t == tstar) ? mexp[t] - pieces[t].sub.n : mexp[t];
            scalar = scalar * poly_pow(pieces[t].a_T, apow);
        }
        for (int j = 0; j < k; ++j)
            out.gammas[j] = out.gammas[j] + scalar * pieces[tstar].sub.gammas[j];
    };
    auto rec = [&](auto&& self, int t, int remaining) -> void {
        if (t == N - 1) {
            mexp[t] = remaining;
            emit();
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            mexp[t] = v;
            self(self, t + 1, remaining - v);
        }
    };
    rec(rec, 0, nprime);

    ExteriorForm check = poly_pow(a, out.n) * eta - apply_A(omegas, out.gammas);
    if (!form_zero_mod(check, ctx.J)) throw Error("lemma22: combined relation failed");
    return out;
}

inline TraceNode solve_inductive(const std::vector<ExteriorForm>& omegas, const ExteriorForm& eta,
                                 int p, const std::vector<Polynomial>& regseq,
                                 const QuotientContext& ctx, int cap) {
    const RingPtr& ring = eta.ring();
    const int m = eta.rank();
    const int k = static_cast<int>(omegas.size());

    TraceNode node;
    node.p = p;
    node.k = k;
    node.level_quotient = ctx.J.generators();
    node.eta = eta;

    if (k == 0) {
        if (!form_zero_mod(eta, ctx.J)) throw Error("inductive: k=0 with eta nonzero mod J");
        node.kind = TraceNode::Kind::BaseKZero;
        return node;
    }
    if (p == 0) {
        // a_1 is a nonzerodivisor annihilating eta, so eta = 0 mod J
        if (!form_zero_mod(eta, ctx.J)) throw Error("inductive: p=0 with eta nonzero mod J");
        node.kind = TraceNode::Kind::BasePZero;
        node.gammas.assign(k, ExteriorForm::zero(ring, m, 0));
        return node;
    }

    node.kind = TraceNode::Kind::Step;
    ExteriorForm Omega = omega_of(omegas, ring, m).Omega;
    node.a = regseq.front();

    Lemma22Result l22 = lemma22_construct(node.a, omegas, Omega, eta, ctx, cap);
    node.n = l22.n;
    node.n1 = l22.n1;
    node.n2 = l22.n2;
    node.star_gammas = l22.gammas;

    Polynomial apow = poly_pow(node.a, node.n);
    QuotientContext ctx2{ring, ideal_sum(ctx.J, {apow})};
    std::vector<Polynomial> tail(regseq.begin() + 1, regseq.end());

    // (p-1, k) recursion on each star gamma over R/(J + a^n)
    node.xis.resize(k);
    for (int j = 0; j < k; ++j) {
        if (!form_zero_mod(apply_B(Omega, node.star_gammas[j]), ctx2.J))
            throw Error("inductive: star gamma is not in Ker B over the quotient");
        TraceNode child = solve_inductive(omegas, node.star_gammas[j], p - 1, tail, ctx2, cap);
        node.xis[j] = child.gammas;
        node.children.push_back(std::move(child));
    }

    // lift: star_gammas[j] = sum_i omega_i ^ xis[j][i] + a^n zetas[j]  (mod J)
    std::vector<Polynomial> lift_gens = ctx.J.generators();
    lift_gens.push_back(apow);
    Ideal lift_ideal(ring, lift_gens);
    for (int j = 0; j < k; ++j) {
        ExteriorForm diff = node.star_gammas[j] - apply_A(omegas, node.xis[j]);
        ExteriorForm::TermList zeta_terms;
        for (const auto& [t, c] : diff.terms()) {
            IdealLift lf = ideal_member_with_lift(c, lift_ideal);
            if (!lf.residual.is_zero()) throw Error("inductive: lift residual nonzero");
            const Polynomial& z = lf.cofactors.back();
            if (!z.is_zero()) zeta_terms.push_back({t, z});
        }
        node.zetas.push_back(ExteriorForm::from_terms(ring, m, std::max(p - 1, 0), zeta_terms));
    }

    if (k == 1) {
        ExteriorForm etap = eta - wedge(omegas[0], node.zetas[0]);
        if (!form_zero_mod(etap, ctx.J))
            throw Error("inductive: k=1 remainder nonzero mod J");
        node.gammas = node.zetas;
    } else {
        std::vector<ExteriorForm> rest(omegas.begin() + 1, omegas.end());
        ExteriorForm etap = eta - apply_A(omegas, node.zetas);
        ExteriorForm hat = omega_of(rest, ring, m).Omega;
        if (!form_zero_mod(apply_B(hat, etap), ctx.J))
            throw Error("inductive: reduced eta is not in Ker B-hat");
        TraceNode child = solve_inductive(rest, etap, p, regseq, ctx, cap);
        node.thetas = child.gammas;
        node.gammas.push_back(node.zetas[0]);
        for (int i = 1; i < k; ++i) node.gammas.push_back(node.zetas[i] + node.thetas[i - 1]);
        node.children.push_back(std::move(child));
    }

    if (!form_zero_mod(eta - apply_A(omegas, node.gammas), ctx.J))
        throw Error("inductive: assembled solution failed to re-verify");
    return node;
}

}  // namespace detail

/// The double induction on (p, k): localize by the first regular-sequence
/// element, descend to the quotient by its power, lift, and recurse on one
/// fewer omega. Demands a verified regular sequence in I(Omega) mod J
/// longer than p; the result carries the full derivation as a trace whose
/// relations all re-verify.
inline DivisionResult divide_inductive(const std::vector<ExteriorForm>& omegas,
                                       const ExteriorForm& eta,
                                       const std::vector<Polynomial>& regseq,
                                       const QuotientContext& ctx, int cap = 32) {
    OmegaPackage pkg = omega_of(omegas, eta.ring(), eta.rank());
    detail::validate_division_input(omegas, eta, pkg.Omega, ctx);
    const int p = eta.degree();
    if (static_cast<int>(regseq.size()) <= p)
        throw InvalidInputError("divide_inductive: regular sequence must be longer than p");
    Ideal membership = ideal_sum(pkg.coefficients, ctx.J);
    for (const auto& a : regseq)
        if (!membership.contains(a))
            throw InvalidInputError("divide_inductive: sequence element not in I(Omega) mod J");
    RegSeqCheck chk = is_regular_sequence(regseq, ctx);
    if (!chk.regular)
        throw InvalidInputError("divide_inductive: sequence is not regular (index " +
                                std::to_string(chk.failing_index) + ")");
    DivisionResult out;
    try {
        TraceNode root = detail::solve_inductive(omegas, eta, p, regseq, ctx, cap);
        out.status = DivisionStatus::Solved;
        out.gammas = root.gammas;
        out.trace = InductiveTrace{std::move(root)};
    } catch (const detail::BudgetError&) {
        out.status = DivisionStatus::InconclusiveBudget;
    }
    return out;
}

/// Generating set of Ker B in degree p: the eta with Omega ^ eta = 0 mod J.
/// Beyond p + k <= m the condition is vacuous and the full basis returns.
inline std::vector<ExteriorForm> kernel_generators(const std::vector<ExteriorForm>& omegas,
                                                   int p, const QuotientContext& ctx) {
    if (omegas.empty()) throw InvalidInputError("kernel_generators: empty omega family");
    const RingPtr& ring = omegas.front().ring();
    const int m = omegas.front().rank();
    const int k = static_cast<int>(omegas.size());
    if (p < 0 || p > m) return {};
    OmegaPackage pkg = omega_of(omegas);
    auto tuples = all_tuples(m, p);
    if (p + k > m) {
        std::vector<ExteriorForm> out;
        for (const auto& t : tuples) out.push_back(ExteriorForm::basis(ring, m, t));
        return out;
    }
    std::vector<ModuleVector> cols;
    cols.reserve(tuples.size());
    for (const auto& t : tuples)
        cols.push_back(flatten(wedge(pkg.Omega, ExteriorForm::basis(ring, m, t))));
    auto kernel = detail::kernel_mod(cols, static_cast<int>(binom(m, p + k)), ctx.J, ring);
    std::vector<ExteriorForm> out;
    for (const auto& v : kernel) {
        ExteriorForm f = unflatten(v, m, p);
        if (f.is_zero()) continue;
        bool dup = false;
        for (const auto& g : out)
            if (g == f) {
                dup = true;
                break;
            }
        if (dup) continue;
        if (!form_zero_mod(apply_B(pkg.Omega, f), ctx.J))
            throw Error("kernel_generators: generator is not in Ker B");
        out.push_back(std::move(f));
    }
    return out;
}

struct ExactnessReport {
    bool exact = false;
    int p = 0, k = 0, m = 0;
    DepthReport depth;  // of I(Omega), in the ambient context
    bool condition_held = false;
    std::vector<ExteriorForm> kernel;
    std::vector<DivisionResult> certificates;
    std::optional<ExteriorForm> witness;  // kernel generator outside im A
};

/// Divides every kernel generator; all solved means the complex is exact at
/// degree p, otherwise the first failure is the witness. The report also
/// states depth I(Omega) and whether the sufficient bound p < depth held.
inline ExactnessReport check_exactness(const std::vector<ExteriorForm>& omegas, int p,
                                       const QuotientContext& ctx) {
    if (omegas.empty()) throw InvalidInputError("check_exactness: empty omega family");
    const int m = omegas.front().rank();
    if (p < 1 || p > m) throw InvalidInputError("check_exactness: need 1 <= p <= m");
    ExactnessReport rep;
    rep.p = p;
    rep.k = static_cast<int>(omegas.size());
    rep.m = m;
    OmegaPackage pkg = omega_of(omegas);
    rep.depth = ctx.trivial() ? depth_via_dim(pkg.coefficients)
                              : grade_via_koszul(pkg.coefficients, ctx);
    rep.condition_held = rep.depth.depth.exceeds(p);
    rep.kernel = kernel_generators(omegas, p, ctx);
    detail::DivisionEngine engine(omegas.front().ring(), m, omegas, p, ctx);
    rep.exact = true;
    for (const auto& eta : rep.kernel) {
        DivisionResult r = engine.solve(eta);
        if (r.status != DivisionStatus::Solved && rep.exact) {
            rep.exact = false;
            rep.witness = eta;
        }
        rep.certificates.push_back(std::move(r));
    }
    return rep;
}

}  // namespace saito
