// Acceptance suite: eight certificate-based criteria, one pass/fail line
// each. Every check is exact rational algebra; there are no tolerances
// anywhere. Exit status is the number of failed criteria.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "saito/saito.hpp"
#include "support/golden_cases.hpp"
#include "support/oracles.hpp"

using namespace saito;

namespace {

struct Tally {
    long checks = 0;
    long failures = 0;
    std::string first_failure;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

ExteriorForm F(const std::string& s, const RingPtr& R, int m) { return parse_form(s, R, m); }
Polynomial P(const std::string& s, const RingPtr& R) { return parse_polynomial(s, R); }

std::vector<Polynomial> PL(std::initializer_list<const char*> ss, const RingPtr& R) {
    std::vector<Polynomial> out;
    for (const char* s : ss) out.push_back(parse_polynomial(s, R));
    return out;
}

// ---------------------------------------------------------------- corpus

struct Instance {
    RingPtr R;
    int m = 0, k = 0, p = 0;
    std::vector<ExteriorForm> omegas;
    OmegaPackage pkg;
    std::vector<Polynomial> regseq;  // certified: length p+1, regular, inside I(Omega)
    ExteriorForm eta;                // combination of kernel generators
};

/// Random instances over 2-3 variables, m in {2,3,4}, k in {1,2},
/// coefficient degree <= 2, with a certified regular sequence of length
/// p+1 in I(Omega) and eta sampled from Ker B with degree <= 2 multipliers.
std::vector<Instance> threshold_corpus(int count, std::uint64_t seed) {
    oracle::Rng rng(seed);
    std::vector<Instance> out;
    int tried = 0;
    while (static_cast<int>(out.size()) < count && tried < 100 * count) {
        ++tried;
        Instance ins;
        int nvars = rng.pick(2, 3);
        ins.R = nvars == 2 ? make_ring({"x", "y"}) : make_ring({"x", "y", "z"});
        ins.m = rng.pick(2, 4);
        ins.k = rng.pick(1, std::min(2, ins.m));
        for (int j = 0; j < ins.k; ++j)
            ins.omegas.push_back(oracle::random_form(rng, ins.R, ins.m, 1, 2, 2));
        ins.pkg = omega_of(ins.omegas, ins.R, ins.m);
        if (ins.pkg.Omega.is_zero()) continue;
        auto ctx = QuotientContext::polynomial(ins.R);
        for (int cand = std::min(2, ins.m - ins.k); cand >= 1; --cand) {
            auto rs = find_regular_sequence(ins.pkg.coefficients, ctx, cand + 1, 1000 + tried);
            if (rs) {
                ins.p = cand;
                ins.regseq = *rs;
                break;
            }
        }
        if (ins.p == 0) continue;
        auto kernel = kernel_generators(ins.omegas, ins.p, ctx);
        if (kernel.empty()) continue;
        ins.eta = ExteriorForm::zero(ins.R, ins.m, ins.p);
        int take = rng.pick(1, std::min<int>(3, static_cast<int>(kernel.size())));
        for (int i = 0; i < take; ++i)
            ins.eta = ins.eta + oracle::random_poly(rng, ins.R, 2, 2) *
                                    kernel[rng.pick(0, static_cast<int>(kernel.size()) - 1)];
        if (ins.eta.is_zero()) continue;
        out.push_back(std::move(ins));
    }
    return out;
}

// ------------------------------------------------------------- criteria

void criterion_threshold(const std::vector<Instance>& corpus, Tally& t) {
    t.require(corpus.size() >= 100, "corpus smaller than 100 instances");
    for (const auto& ins : corpus) {
        auto ctx = QuotientContext::polynomial(ins.R);
        // the certificate of the hypothesis: a verified regular sequence of
        // length p+1 inside I(Omega)
        t.require(static_cast<int>(ins.regseq.size()) == ins.p + 1, "sequence length");
        t.require(is_regular_sequence(ins.regseq, ctx).regular, "sequence not regular");
        for (const auto& a : ins.regseq)
            t.require(ins.pkg.coefficients.contains(a), "sequence element outside I(Omega)");

        DivisionResult direct = divide(ins.omegas, ins.eta, ctx);
        t.require(direct.status == DivisionStatus::Solved, "divide failed under the threshold");
        if (direct.status == DivisionStatus::Solved)
            t.require(apply_A(ins.omegas, direct.gammas) == ins.eta, "divide gamma re-expansion");

        DivisionResult ind = divide_inductive(ins.omegas, ins.eta, ins.regseq, ctx);
        t.require(ind.status == DivisionStatus::Solved, "inductive solve failed");
        if (ind.status == DivisionStatus::Solved) {
            t.require(apply_A(ins.omegas, ind.gammas) == ins.eta, "inductive re-expansion");
            t.require(ind.trace.has_value() &&
                          oracle::trace_ok(ind.trace->root, ins.omegas, ins.R),
                      "trace relation failed to re-verify");
        }
    }
}

void criterion_sharpness(Tally& t) {
    // the boundary fixture: p = depth I(Omega) = 1, so the division is
    // obstructed and degree-bounded brute force confirms nonexistence
    auto R2 = make_ring({"x", "y"});
    auto ctx2 = QuotientContext::polynomial(R2);
    ExteriorForm w = F("x*e1", R2, 2), eta = F("e1", R2, 2);
    t.require(depth_via_dim(coeff_ideal(w)).depth == Depth::of(1), "fixture depth");
    DivisionResult r = divide({w}, eta, ctx2);
    t.require(r.status == DivisionStatus::NoSolution, "fixture must be obstructed");
    t.require(unflatten(r.obstruction, 2, 1) == eta, "fixture obstruction is e{1}");
    t.require(!oracle::brute_force_divide({w}, eta, ctx2, 3).has_value(),
              "brute force found a solution at degree 3");

    // randomized instances with p >= depth: the solver verdict must match
    // exact degree-bounded brute force
    auto R = make_ring({"x", "y", "z"});
    auto ctx = QuotientContext::polynomial(R);
    oracle::Rng rng(424243);
    int done = 0, tried = 0;
    while (done < 10 && tried < 500) {
        ++tried;
        int m = rng.pick(2, 3);
        int k = 1;
        std::vector<ExteriorForm> omegas{oracle::random_form(rng, R, m, 1, 1, 2)};
        OmegaPackage pkg = omega_of(omegas, R, m);
        if (pkg.Omega.is_zero()) continue;
        Depth depth = depth_via_dim(pkg.coefficients).depth;
        if (depth.infinite || depth.value < 1) continue;
        int p = depth.value;  // p >= depth: the sufficient condition fails
        if (p + k > m) continue;
        auto kernel = kernel_generators(omegas, p, ctx);
        if (kernel.empty()) continue;
        ExteriorForm eta2 = ExteriorForm::zero(R, m, p);
        for (int i = 0; i < 2; ++i)
            eta2 = eta2 + oracle::random_poly(rng, R, 1, 2) *
                              kernel[rng.pick(0, static_cast<int>(kernel.size()) - 1)];
        if (eta2.is_zero()) continue;
        int maxdeg = 1;
        for (const auto& f : omegas)
            for (const auto& [tu, c] : f.terms()) maxdeg = std::max(maxdeg, c.total_degree());
        for (const auto& [tu, c] : eta2.terms()) maxdeg = std::max(maxdeg, c.total_degree());
        int bound = maxdeg + 2;
        DivisionResult verdict = divide(omegas, eta2, ctx);
        if (verdict.status == DivisionStatus::Solved)
            for (const auto& g : verdict.gammas)
                for (const auto& [tu, c] : g.terms()) bound = std::max(bound, c.total_degree());
        auto brute = oracle::brute_force_divide(omegas, eta2, ctx, bound);
        t.require((verdict.status == DivisionStatus::Solved) == brute.has_value(),
                  "solver verdict disagrees with brute force");
        ++done;
    }
    t.require(done >= 10, "fewer than 10 sharpness instances");
}

void criterion_localized(const std::vector<Instance>& corpus, Tally& t) {
    for (const auto& ins : corpus) {
        auto ctx = QuotientContext::polynomial(ins.R);
        for (const auto& a : ins.pkg.coefficients.generators()) {
            if (a.is_zero()) continue;
            LocalizeResult lr = localize_divide(a, ins.omegas, ins.eta, ctx, 32);
            t.require(lr.status == DivisionStatus::Solved, "localized division hit the cap");
            if (lr.status != DivisionStatus::Solved) continue;
            t.require(lr.n <= 32, "exponent exceeds the cap");
            ExteriorForm lhs = poly_pow(a, lr.n) * ins.eta;
            t.require(apply_A(ins.omegas, lr.gammas) == lhs, "a^n eta re-expansion");
        }
    }
    // pinned worked examples: (n, gamma contract)
    auto R2 = make_ring({"x", "y"});
    auto ctx2 = QuotientContext::polynomial(R2);
    {
        LocalizeResult r = localize_divide(P("x", R2), {F("x*e1", R2, 2)}, F("e1", R2, 2), ctx2);
        t.require(r.status == DivisionStatus::Solved && r.n == 1, "example 1: n = 1");
        t.require(apply_A({F("x*e1", R2, 2)}, r.gammas) == F("x*e1", R2, 2), "example 1 contract");
    }
    {
        ExteriorForm w = F("x*e1 + y*e2", R2, 2);
        LocalizeResult r = localize_divide(P("x", R2), {w}, w, ctx2);
        t.require(r.status == DivisionStatus::Solved && r.n == 0, "example 2: n = 0");
        t.require(apply_A({w}, r.gammas) == w, "example 2 contract");
    }
    {
        ExteriorForm w = F("x*e1 + y*e2", R2, 2);
        LocalizeResult r = localize_divide(P("y", R2), {w}, F("e{1,2}", R2, 2), ctx2);
        t.require(r.status == DivisionStatus::Solved && r.n == 1, "example 3: n = 1");
        t.require(apply_A({w}, r.gammas) == P("y", R2) * F("e{1,2}", R2, 2),
                  "example 3 contract");
    }
}

void criterion_sequences(const std::vector<Instance>& corpus, Tally& t) {
    struct Entry {
        std::vector<Polynomial> seq;
        QuotientContext ctx;
    };
    std::vector<Entry> entries;
    // harvested from the threshold corpus (lengths 2-3 by construction)
    for (const auto& ins : corpus) {
        if (entries.size() >= 16) break;
        if (ins.regseq.size() >= 2)
            entries.push_back({ins.regseq, QuotientContext::polynomial(ins.R)});
    }
    // handcrafted, including quotient contexts
    auto R = make_ring({"x", "y", "z"});
    auto ctx0 = QuotientContext::polynomial(R);
    entries.push_back({PL({"x", "y", "z"}, R), ctx0});
    entries.push_back({PL({"x + y", "y + z"}, R), ctx0});
    entries.push_back({PL({"x^2", "y^2", "z"}, R), ctx0});
    QuotientContext mod_xy = QuotientContext::modulo(Ideal(R, PL({"x*y"}, R)));
    entries.push_back({PL({"x + y", "z"}, R), mod_xy});
    entries.push_back({PL({"z", "x + y"}, R), mod_xy});
    QuotientContext mod_z2 = QuotientContext::modulo(Ideal(R, PL({"z^2"}, R)));
    entries.push_back({PL({"x", "y"}, R), mod_z2});
    QuotientContext mod_sq = QuotientContext::modulo(Ideal(R, PL({"x^2 - y*z"}, R)));
    entries.push_back({PL({"y - z", "x"}, R), mod_sq});

    t.require(entries.size() >= 20, "fewer than 20 certified sequences");
    int quotient_entries = 0;
    for (const auto& e : entries) {
        if (!e.ctx.trivial()) ++quotient_entries;
        t.require(is_regular_sequence(e.seq, e.ctx).regular, "sequence not regular");
        // ((J + a_2..a_i) : a_1) = (J + a_2..a_i) for every prefix
        for (std::size_t i = 1; i <= e.seq.size(); ++i) {
            std::vector<Polynomial> rest(e.seq.begin() + 1, e.seq.begin() + i);
            Ideal Ri = ideal_sum(e.ctx.J, rest);
            t.require(ideal_equal(ideal_quotient(Ri, e.seq[0]), Ri),
                      "quotient identity failed");
        }
        // powers of the first element preserve regularity
        for (int n : {2, 3}) {
            std::vector<Polynomial> powered = e.seq;
            powered[0] = poly_pow(e.seq[0], n);
            t.require(is_regular_sequence(powered, e.ctx).regular,
                      "powered sequence not regular");
        }
    }
    t.require(quotient_entries >= 3, "too few quotient-context sequences");
}

void criterion_depth_oracles(Tally& t) {
    auto R = make_ring({"x", "y", "z"});
    auto ctx = QuotientContext::polynomial(R);

    struct Named {
        std::vector<const char*> gens;
        Depth expect;
    };
    std::vector<Named> named = {
        {{"x", "y", "z"}, Depth::of(3)},       {{"x*y", "x*z"}, Depth::of(1)},
        {{"x*y", "x*z", "y*z"}, Depth::of(2)}, {{"1"}, Depth::inf()},
        {{"0"}, Depth::of(0)},
    };
    std::vector<Ideal> corpus;
    for (const auto& n : named) {
        std::vector<Polynomial> gens;
        for (const char* s : n.gens) gens.push_back(P(s, R));
        Ideal I(R, gens);
        t.require(depth_via_dim(I).depth == n.expect, "pinned depth value");
        corpus.push_back(std::move(I));
    }
    for (auto gens : std::vector<std::vector<const char*>>{
             {"x"},
             {"x^2"},
             {"x", "y"},
             {"x^2", "y^2"},
             {"x^2", "y^2", "z^2"},
             {"x + y + z", "x - y"},
             {"x*y"},
             {"x^2 - y", "y^2 - z"},
             {"x*y - 1", "z"},
             {"x", "y", "z", "x + y"},
             {"x*y", "x*z", "y*z", "x^2"},
             {"x^2*y"},
             {"x*y + z^2"},
             {"x^3", "y^3"},
             {"x + 1", "y - 1"},
             {"x*y", "y^2"},
             {"x*y*z"},
             {"x^2 + y^2 + z^2"},
         }) {
        std::vector<Polynomial> ps;
        for (const char* s : gens) ps.push_back(P(s, R));
        corpus.push_back(Ideal(R, ps));
    }
    // coefficient ideals of omega families, for the rank bound
    std::vector<OmegaPackage> packages;
    {
        oracle::Rng rng(777);
        packages.push_back(omega_of({F("x*e1 + y*e2 + z*e3", R, 3)}));
        packages.push_back(omega_of({F("x*e1 + y*e2 + z*e3 + e4", R, 4),
                                     F("y*e1 + z*e2 + x*e3 + x*y*e4", R, 4)}));
        packages.push_back(omega_of({F("x*e1", R, 2)}));
        packages.push_back(omega_of({F("x*e1 + y*e2", R, 3), F("z*e1 + x*e3", R, 3)}));
        while (packages.size() < 12) {
            int m = rng.pick(2, 4);
            int k = rng.pick(1, std::min(2, m));
            std::vector<ExteriorForm> omegas;
            for (int j = 0; j < k; ++j)
                omegas.push_back(oracle::random_form(rng, R, m, 1, 2, 2));
            OmegaPackage pkg = omega_of(omegas, R, m);
            if (pkg.Omega.is_zero()) continue;
            packages.push_back(std::move(pkg));
        }
        for (const auto& pkg : packages) corpus.push_back(pkg.coefficients);
    }

    t.require(corpus.size() >= 30, "depth corpus smaller than 30");
    for (const auto& I : corpus) {
        DepthReport dim = depth_via_dim(I);
        DepthReport kos = grade_via_koszul(I, ctx);
        t.require(dim.depth == kos.depth, "depth oracles disagree");
        int nonzero_gens = 0;
        for (const auto& g : I.generators())
            if (!g.is_zero()) ++nonzero_gens;
        if (!dim.depth.infinite)
            t.require(dim.depth.value <= std::max(nonzero_gens, 1), "generator bound violated");
        if (!dim.depth.infinite && dim.depth.value > 0) {
            t.require(!dim.witness.empty(), "finite report lacks a witness");
            if (!dim.witness.empty()) {
                t.require(is_regular_sequence(dim.witness, ctx).regular, "witness not regular");
                t.require(static_cast<int>(dim.witness.size()) == dim.depth.value,
                          "witness length");
                for (const auto& a : dim.witness)
                    t.require(I.contains(a), "witness element outside the ideal");
            }
        }
    }
    for (const auto& pkg : packages) {
        Depth d = depth_via_dim(pkg.coefficients).depth;
        if (!d.infinite)
            t.require(d.value <= pkg.m - pkg.k + 1, "depth exceeds m - k + 1");
    }
}

void criterion_exactness(Tally& t) {
    auto R = make_ring({"x", "y", "z"});
    auto ctx = QuotientContext::polynomial(R);
    ExteriorForm w = F("x*e1 + y*e2 + z*e3", R, 3);

    for (int p : {1, 2}) {
        ExactnessReport rep = check_exactness({w}, p, ctx);
        t.require(rep.exact, "Koszul family must be exact");
        t.require(rep.depth.depth == Depth::of(3) && rep.condition_held, "depth 3 > p");
        for (std::size_t i = 0; i < rep.kernel.size(); ++i) {
            t.require(rep.certificates[i].status == DivisionStatus::Solved, "certificate status");
            t.require(apply_A({w}, rep.certificates[i].gammas) == rep.kernel[i],
                      "certificate re-expansion");
        }
    }

    auto R2 = make_ring({"x", "y"});
    ExactnessReport neg = check_exactness({F("x*e1", R2, 2)}, 1, QuotientContext::polynomial(R2));
    t.require(!neg.exact, "boundary fixture must not be exact");
    t.require(neg.witness.has_value(), "missing witness");
    if (neg.witness) {
        t.require(apply_B(F("x*e1", R2, 2), *neg.witness).is_zero(), "witness not in Ker B");
        bool found = false;
        for (std::size_t i = 0; i < neg.kernel.size(); ++i)
            if (neg.kernel[i] == *neg.witness) {
                found = true;
                t.require(!neg.certificates[i].obstruction.is_zero(), "obstruction is zero");
            }
        t.require(found, "witness not among the kernel generators");
    }

    // quotient context: collapse z
    QuotientContext mod_z = QuotientContext::modulo(Ideal(R, PL({"z"}, R)));
    ExactnessReport q = check_exactness({w}, 1, mod_z);
    t.require(q.exact, "quotient variant must be exact");
    t.require(q.depth.depth == Depth::of(2), "depth over the quotient");
    for (std::size_t i = 0; i < q.kernel.size(); ++i) {
        t.require(q.certificates[i].status == DivisionStatus::Solved, "quotient certificate");
        t.require(form_zero_mod(q.kernel[i] - apply_A({w}, q.certificates[i].gammas), mod_z.J),
                  "quotient certificate re-expansion mod J");
    }
    // and a negative quotient case
    QuotientContext mod_y = QuotientContext::modulo(Ideal(R2, {P("y", R2)}));
    ExactnessReport qneg = check_exactness({F("x*e1", R2, 2)}, 1, mod_y);
    t.require(!qneg.exact && qneg.witness.has_value(), "negative quotient case");
}

void criterion_invariants(Tally& t) {
    auto R = make_ring({"x", "y", "z"});
    oracle::Rng rng(31337);

    // wedge antisymmetry and associativity
    for (int it = 0; it < 150; ++it) {
        int m = rng.pick(2, 4);
        int pa = rng.pick(0, 2), pb = rng.pick(0, 2), pc = rng.pick(0, 2);
        ExteriorForm a = oracle::random_form(rng, R, m, pa, 2, 2);
        ExteriorForm b = oracle::random_form(rng, R, m, pb, 2, 2);
        ExteriorForm c = oracle::random_form(rng, R, m, pc, 2, 2);
        ExteriorForm ab = wedge(a, b), ba = wedge(b, a);
        t.require(ab == ((pa * pb) % 2 == 0 ? ba : -ba), "graded antisymmetry");
        t.require(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)), "associativity");
    }
    // BA = 0
    for (int it = 0; it < 150; ++it) {
        int m = rng.pick(2, 4);
        int k = rng.pick(1, 2), p = rng.pick(1, m);
        std::vector<ExteriorForm> omegas, gammas;
        for (int j = 0; j < k; ++j) {
            omegas.push_back(oracle::random_form(rng, R, m, 1, 2, 2));
            gammas.push_back(oracle::random_form(rng, R, m, p - 1, 2, 2));
        }
        ExteriorForm Omega = omega_of(omegas, R, m).Omega;
        t.require(apply_B(Omega, apply_A(omegas, gammas)).is_zero(), "BA = 0");
    }
    // minor identity
    for (int it = 0; it < 60; ++it) {
        int m = rng.pick(2, 4);
        int k = rng.pick(1, std::min(3, m));
        std::vector<ExteriorForm> omegas;
        for (int j = 0; j < k; ++j) omegas.push_back(oracle::random_form(rng, R, m, 1, 2, 2));
        ExteriorForm Omega = omega_of(omegas, R, m).Omega;
        for (const auto& T : all_tuples(m, k)) {
            std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>(k));
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) sub[r][c] = omegas[c].coefficient({T[r]});
            t.require(Omega.coefficient(T) == oracle::det_by_permutations(sub, R),
                      "coefficient is not the minor");
        }
    }
    // coefficient-ideal invariance under 10 unimodular basis changes
    for (int it = 0; it < 10; ++it) {
        int m = rng.pick(2, 3);
        int k = rng.pick(1, 2);
        std::vector<ExteriorForm> omegas;
        for (int j = 0; j < k; ++j) omegas.push_back(oracle::random_form(rng, R, m, 1, 1, 2));
        std::vector<std::vector<Polynomial>> U(m, std::vector<Polynomial>(m, Polynomial::zero(R)));
        for (int i = 0; i < m; ++i) U[i][i] = Polynomial::constant(R, 1);
        for (int step = 0; step < 4; ++step) {
            int i = rng.pick(0, m - 1), j = rng.pick(0, m - 1);
            if (i == j) continue;
            Polynomial f = oracle::random_poly(rng, R, 1, 1);
            for (int c = 0; c < m; ++c) U[i][c] = U[i][c] + f * U[j][c];
        }
        std::vector<ExteriorForm> transformed;
        for (const auto& w : omegas) {
            ExteriorForm::TermList ts;
            for (int i = 0; i < m; ++i) {
                Polynomial acc = Polynomial::zero(R);
                for (int j2 = 0; j2 < m; ++j2) acc = acc + U[i][j2] * w.coefficient({j2 + 1});
                if (!acc.is_zero()) ts.push_back({{i + 1}, acc});
            }
            transformed.push_back(ExteriorForm::from_terms(R, m, 1, ts));
        }
        t.require(ideal_equal(omega_of(omegas, R, m).coefficients,
                              omega_of(transformed, R, m).coefficients),
                  "coefficient ideal changed under a unimodular transform");
    }
    // parser round-trips
    for (int it = 0; it < 250; ++it) {
        Polynomial p = oracle::random_poly(rng, R, 4, 5);
        t.require(parse_polynomial(to_string(p), R) == p, "polynomial round-trip");
        int m = rng.pick(2, 4);
        int deg = rng.pick(0, m);
        ExteriorForm f = oracle::random_form(rng, R, m, deg, 3, 3);
        t.require(parse_form(to_string(f), R, m, deg) == f, "form round-trip");
    }
    // normal-form idempotence
    for (int it = 0; it < 150; ++it) {
        std::vector<Polynomial> gens = {oracle::random_poly(rng, R, 2, 2, 2, false),
                                        oracle::random_poly(rng, R, 2, 2, 2, false)};
        auto gb = buchberger(R, gens);
        Polynomial f = oracle::random_poly(rng, R, 3, 4);
        Polynomial nf = normal_form(f, gb);
        t.require(normal_form(nf, gb) == nf, "normal form not idempotent");
    }
}

void criterion_cli(Tally& t) {
    for (const auto& c : golden::kCases) {
        golden::RunResult first = golden::run_cli(c.args);
        golden::RunResult second = golden::run_cli(c.args);
        t.require(first.ran && second.ran, std::string("failed to run: ") + c.name);
        t.require(first.exit_code == c.exit_code, std::string("exit code: ") + c.name);
        t.require(first.out == second.out, std::string("not byte-stable: ") + c.name);
        std::ifstream in(std::string(SAITO_GOLDEN_DIR) + "/expected/" + c.name + ".out",
                         std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        t.require(first.out == ss.str(), std::string("differs from golden: ") + c.name);
    }
    t.require(std::size(golden::kCases) >= 12, "fewer than 12 golden cases");
}

}  // namespace

int main() {
    int failed_criteria = 0;
    auto run = [&](int num, const std::string& label, auto&& fn) {
        Tally t;
        Timer timer;
        try {
            fn(t);
        } catch (const std::exception& e) {
            t.require(false, std::string("exception: ") + e.what());
        }
        bool pass = t.failures == 0;
        if (!pass) ++failed_criteria;
        std::cout << "criterion " << num << ": " << (pass ? "PASS" : "FAIL") << "  " << label
                  << "  (" << t.checks << " checks, " << timer.ms() << " ms)";
        if (!pass) std::cout << "  first failure: " << t.first_failure;
        std::cout << "\n" << std::flush;
    };

    Timer total;
    std::vector<Instance> corpus = threshold_corpus(100, 20250810);

    run(1, "division threshold suite: 100 certified instances, both solvers",
        [&](Tally& t) { criterion_threshold(corpus, t); });
    run(2, "sharpness: obstructed fixture and brute-force agreement",
        [&](Tally& t) { criterion_sharpness(t); });
    run(3, "localized division: a^n eta divides for every coefficient",
        [&](Tally& t) { criterion_localized(corpus, t); });
    run(4, "regular sequences: quotient identities and power stability",
        [&](Tally& t) { criterion_sequences(corpus, t); });
    run(5, "depth oracle agreement and bounds on a 30+ ideal corpus",
        [&](Tally& t) { criterion_depth_oracles(t); });
    run(6, "exactness certification, including quotient contexts",
        [&](Tally& t) { criterion_exactness(t); });
    run(7, "algebraic invariants: 1000+ exact randomized checks",
        [&](Tally& t) { criterion_invariants(t); });
    run(8, "CLI golden corpus: byte-identical, all exit codes",
        [&](Tally& t) { criterion_cli(t); });

    std::cout << (failed_criteria == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << total.ms() << " ms total)\n";
    return failed_criteria;
}
