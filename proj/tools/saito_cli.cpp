// Command-line front end: problem files in, certificates out.
//
// Exit codes: 0 success/exact/regular; 1 mathematically negative or budget
// exhausted (the report body distinguishes); 2 parse or validation error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "saito/saito.hpp"

using json = nlohmann::ordered_json;
using namespace saito;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

struct Output {
    bool as_json = false;
    json j;
    std::ostringstream text;

    void line(const std::string& s) { text << s << "\n"; }

    void flush() {
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text.str();
    }
};

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open problem file: " + path);
    return parse_problem(in);
}

RingPtr ring_from_flags(const std::string& vars, const std::string& order_name) {
    MonomialOrder order;
    if (order_name == "lex")
        order.kind = OrderKind::Lex;
    else if (!order_name.empty() && order_name != "grevlex")
        throw InvalidInputError("unknown order '" + order_name + "' (grevlex|lex)");
    std::vector<std::string> names;
    for (const auto& v : saito::detail::split_commas(vars))
        if (!v.empty()) names.push_back(v);
    return make_ring(names, order);
}

std::vector<Polynomial> parse_poly_list(const std::string& text, const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (const auto& s : saito::detail::split_commas(text))
        if (!s.empty()) out.push_back(parse_polynomial(s, ring));
    return out;
}

std::string status_name(DivisionStatus s) {
    switch (s) {
        case DivisionStatus::Solved: return "solved";
        case DivisionStatus::NoSolution: return "no-solution";
        case DivisionStatus::InconclusiveBudget: return "inconclusive-budget";
    }
    return "?";
}

std::string method_name(DepthMethod m) {
    switch (m) {
        case DepthMethod::DimensionFormula: return "dimension-formula";
        case DepthMethod::KoszulGrade: return "koszul-grade";
        case DepthMethod::SequenceSearch: return "sequence-search";
    }
    return "?";
}

std::string join_polys(const std::vector<Polynomial>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ", ";
        s += to_string(ps[i]);
    }
    return s;
}

json poly_array(const std::vector<Polynomial>& ps) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(to_string(p));
    return arr;
}

json form_array(const std::vector<ExteriorForm>& fs) {
    json arr = json::array();
    for (const auto& f : fs) arr.push_back(to_string(f));
    return arr;
}

void print_trace_text(const TraceNode& node, Output& out, int depth) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    std::string mod = node.level_quotient.empty() ? "0" : join_polys(node.level_quotient);
    switch (node.kind) {
        case TraceNode::Kind::BaseKZero:
            out.line(pad + "base (p=" + std::to_string(node.p) + ", k=0) mod (" + mod +
                     "): eta = 0");
            return;
        case TraceNode::Kind::BasePZero:
            out.line(pad + "base (p=0, k=" + std::to_string(node.k) + ") mod (" + mod +
                     "): eta = 0, gammas = 0");
            return;
        case TraceNode::Kind::Step: break;
    }
    out.line(pad + "step (p=" + std::to_string(node.p) + ", k=" + std::to_string(node.k) +
             ") mod (" + mod + "): a = " + to_string(node.a) + ", n = " + std::to_string(node.n) +
             " (n1 = " + std::to_string(node.n1) + ", n2 = " + std::to_string(node.n2) + ")");
    for (std::size_t j = 0; j < node.star_gammas.size(); ++j)
        out.line(pad + "  star gamma[" + std::to_string(j + 1) +
                 "] = " + to_string(node.star_gammas[j]));
    for (std::size_t j = 0; j < node.zetas.size(); ++j)
        out.line(pad + "  zeta[" + std::to_string(j + 1) + "] = " + to_string(node.zetas[j]));
    for (std::size_t i = 0; i < node.thetas.size(); ++i)
        out.line(pad + "  theta[" + std::to_string(i + 2) + "] = " + to_string(node.thetas[i]));
    for (const auto& c : node.children) print_trace_text(c, out, depth + 1);
}

json trace_json(const TraceNode& node) {
    json j;
    switch (node.kind) {
        case TraceNode::Kind::BaseKZero: j["kind"] = "base-k0"; break;
        case TraceNode::Kind::BasePZero: j["kind"] = "base-p0"; break;
        case TraceNode::Kind::Step: j["kind"] = "step"; break;
    }
    j["p"] = node.p;
    j["k"] = node.k;
    j["quotient"] = poly_array(node.level_quotient);
    j["eta"] = to_string(node.eta);
    if (node.kind == TraceNode::Kind::Step) {
        j["a"] = to_string(node.a);
        j["n"] = node.n;
        j["n1"] = node.n1;
        j["n2"] = node.n2;
        j["star_gammas"] = form_array(node.star_gammas);
        j["zetas"] = form_array(node.zetas);
        j["thetas"] = form_array(node.thetas);
    }
    j["gammas"] = form_array(node.gammas);
    json kids = json::array();
    for (const auto& c : node.children) kids.push_back(trace_json(c));
    j["children"] = std::move(kids);
    return j;
}

void emit_gammas(const std::vector<ExteriorForm>& gammas, Output& out) {
    for (std::size_t j = 0; j < gammas.size(); ++j)
        out.line("gamma[" + std::to_string(j + 1) + "] = " + to_string(gammas[j]));
    out.j["gammas"] = form_array(gammas);
}

// ---- subcommands ----

int cmd_wedge(const ProblemFile& pf, Output& out) {
    if (pf.omegas.empty()) throw InvalidInputError("wedge: no 'omega:' entries");
    ExteriorForm acc = pf.omegas.front();
    for (std::size_t i = 1; i < pf.omegas.size(); ++i) acc = wedge(acc, pf.omegas[i]);
    if (pf.eta) acc = wedge(acc, *pf.eta);
    out.line("wedge = " + to_string(acc));
    out.j["command"] = "wedge";
    out.j["result"] = to_string(acc);
    return kExitOk;
}

int cmd_omega(const ProblemFile& pf, Output& out) {
    if (pf.omegas.empty()) throw InvalidInputError("omega: no 'omega:' entries");
    OmegaPackage pkg = omega_of(pf.omegas);
    out.line("Omega = " + to_string(pkg.Omega));
    out.line("I(Omega) = " + (pkg.coefficients.generators().empty()
                                  ? std::string("0")
                                  : join_polys(pkg.coefficients.generators())));
    out.j["command"] = "omega";
    out.j["Omega"] = to_string(pkg.Omega);
    out.j["I_Omega"] = poly_array(pkg.coefficients.generators());
    return kExitOk;
}

int cmd_depth(const Ideal& I, const QuotientContext& ctx, Output& out) {
    DepthReport rep = ctx.trivial() ? depth_via_dim(I) : grade_via_koszul(I, ctx);
    out.line("depth = " + rep.depth.str());
    out.line("method = " + method_name(rep.method));
    if (!rep.witness.empty()) out.line("witness = " + join_polys(rep.witness));
    out.j["command"] = "depth";
    if (rep.depth.infinite)
        out.j["depth"] = "infinity";
    else
        out.j["depth"] = rep.depth.value;
    out.j["method"] = method_name(rep.method);
    out.j["witness"] = poly_array(rep.witness);
    return kExitOk;
}

int cmd_regseq_check(const std::vector<Polynomial>& seq, const QuotientContext& ctx,
                     Output& out) {
    RegSeqCheck chk = is_regular_sequence(seq, ctx);
    out.j["command"] = "regseq";
    out.j["mode"] = "check";
    out.j["regular"] = chk.regular;
    if (chk.regular) {
        out.line("REGULAR");
        return kExitOk;
    }
    if (chk.failing_index == 0) {
        out.line("NOT REGULAR (improper ideal)");
    } else {
        out.line("NOT REGULAR at index " + std::to_string(chk.failing_index));
    }
    out.j["failing_index"] = chk.failing_index;
    return kExitNegative;
}

int cmd_regseq_find(const Ideal& I, const QuotientContext& ctx, int len, std::uint64_t seed,
                    Output& out) {
    auto found = find_regular_sequence(I, ctx, len, seed);
    out.j["command"] = "regseq";
    out.j["mode"] = "find";
    out.j["found"] = found.has_value();
    if (!found) {
        out.line("NOT FOUND (search budget exhausted)");
        return kExitNegative;
    }
    out.line("FOUND");
    for (std::size_t i = 0; i < found->size(); ++i)
        out.line("a[" + std::to_string(i + 1) + "] = " + to_string((*found)[i]));
    out.j["sequence"] = poly_array(*found);
    return kExitOk;
}

int cmd_divide(const ProblemFile& pf, bool inductive, bool show_trace, Output& out) {
    if (pf.omegas.empty()) throw InvalidInputError("divide: no 'omega:' entries");
    if (!pf.eta) throw InvalidInputError("divide: no 'eta:' entry");
    QuotientContext ctx = pf.context();
    DivisionResult res;
    if (inductive) {
        OmegaPackage pkg = omega_of(pf.omegas);
        int p = pf.eta->degree();
        auto regseq = find_regular_sequence(pkg.coefficients, ctx, p + 1, pf.seed);
        if (!regseq) {
            out.line("INCONCLUSIVE (no regular sequence of length " + std::to_string(p + 1) +
                     " found in I(Omega))");
            out.j["command"] = "divide";
            out.j["status"] = "inconclusive-budget";
            return kExitNegative;
        }
        out.line("regular sequence: " + join_polys(*regseq));
        out.j["regular_sequence"] = poly_array(*regseq);
        res = divide_inductive(pf.omegas, *pf.eta, *regseq, ctx, pf.cap);
    } else {
        res = divide(pf.omegas, *pf.eta, ctx);
    }
    out.j["command"] = "divide";
    out.j["status"] = status_name(res.status);
    switch (res.status) {
        case DivisionStatus::Solved:
            out.line("SOLVED");
            emit_gammas(res.gammas, out);
            if (show_trace && res.trace) {
                out.line("trace:");
                print_trace_text(res.trace->root, out, 1);
                out.j["trace"] = trace_json(res.trace->root);
            }
            return kExitOk;
        case DivisionStatus::NoSolution: {
            ExteriorForm obs = unflatten(res.obstruction, pf.rank, pf.eta->degree());
            out.line("NO SOLUTION; obstruction: " + to_string(obs));
            out.j["obstruction"] = to_string(obs);
            return kExitNegative;
        }
        case DivisionStatus::InconclusiveBudget:
            out.line("INCONCLUSIVE (budget exhausted, cap = " + std::to_string(pf.cap) + ")");
            return kExitNegative;
    }
    return kExitNegative;
}

int cmd_localize(const ProblemFile& pf, Output& out) {
    if (pf.omegas.empty()) throw InvalidInputError("localize-divide: no 'omega:' entries");
    if (!pf.eta) throw InvalidInputError("localize-divide: no 'eta:' entry");
    if (!pf.element) throw InvalidInputError("localize-divide: no element (flag or 'element:')");
    LocalizeResult res = localize_divide(*pf.element, pf.omegas, *pf.eta, pf.context(), pf.cap);
    out.j["command"] = "localize-divide";
    out.j["status"] = status_name(res.status);
    if (res.status != DivisionStatus::Solved) {
        out.line("BUDGET EXHAUSTED (cap = " + std::to_string(pf.cap) + ")");
        return kExitNegative;
    }
    out.line("n = " + std::to_string(res.n));
    out.j["n"] = res.n;
    emit_gammas(res.gammas, out);
    return kExitOk;
}

int cmd_check_exact(const ProblemFile& pf, std::optional<int> p_flag, Output& out) {
    if (pf.omegas.empty()) throw InvalidInputError("check-exact: no 'omega:' entries");
    std::optional<int> p = p_flag ? p_flag : pf.p;
    if (!p) throw InvalidInputError("check-exact: no p (flag or 'p:')");
    ExactnessReport rep = check_exactness(pf.omegas, *p, pf.context());
    out.j["command"] = "check-exact";
    out.j["exact"] = rep.exact;
    out.j["p"] = rep.p;
    if (rep.depth.depth.infinite)
        out.j["depth"] = "infinity";
    else
        out.j["depth"] = rep.depth.depth.value;
    out.j["condition_held"] = rep.condition_held;
    std::string dstr = "depth I(Omega) = " + rep.depth.depth.str();
    if (rep.exact) {
        if (rep.condition_held)
            out.line("EXACT (" + dstr + " > p = " + std::to_string(rep.p) + ")");
        else
            out.line("EXACT (" + dstr + ", p = " + std::to_string(rep.p) +
                     "; sufficient condition did not apply)");
    } else {
        out.line("NOT EXACT (" + dstr + ", p = " + std::to_string(rep.p) + ")");
    }
    json kernel = json::array();
    for (std::size_t i = 0; i < rep.kernel.size(); ++i) {
        out.line("ker[" + std::to_string(i + 1) + "] = " + to_string(rep.kernel[i]));
        json entry;
        entry["eta"] = to_string(rep.kernel[i]);
        const DivisionResult& r = rep.certificates[i];
        entry["status"] = status_name(r.status);
        if (r.status == DivisionStatus::Solved) {
            for (std::size_t j = 0; j < r.gammas.size(); ++j)
                out.line("  gamma[" + std::to_string(j + 1) + "] = " + to_string(r.gammas[j]));
            entry["gammas"] = form_array(r.gammas);
        } else {
            ExteriorForm obs = unflatten(r.obstruction, rep.m, rep.p);
            out.line("  obstruction = " + to_string(obs));
            entry["obstruction"] = to_string(obs);
        }
        kernel.push_back(std::move(entry));
    }
    out.j["kernel"] = std::move(kernel);
    if (rep.witness) {
        out.line("witness = " + to_string(*rep.witness));
        out.j["witness"] = to_string(*rep.witness);
    }
    return rep.exact ? kExitOk : kExitNegative;
}

int cmd_kernel(const ProblemFile& pf, std::optional<int> p_flag, Output& out) {
    if (pf.omegas.empty()) throw InvalidInputError("kernel: no 'omega:' entries");
    std::optional<int> p = p_flag ? p_flag : pf.p;
    if (!p) throw InvalidInputError("kernel: no p (flag or 'p:')");
    auto gens = kernel_generators(pf.omegas, *p, pf.context());
    out.line("kernel generators: " + std::to_string(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i)
        out.line("ker[" + std::to_string(i + 1) + "] = " + to_string(gens[i]));
    out.j["command"] = "kernel";
    out.j["generators"] = form_array(gens);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact division of exterior forms over rational polynomial rings"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, ring_flag, order_flag = "grevlex", ideal_flag, quotient_flag, seq_flag,
                element_flag;
    bool inductive = false, show_trace = false, check_flag = false;
    int find_len = 0, p_flag = -1, cap_flag = -1;
    std::uint64_t seed_flag = 0;
    bool seed_set = false;

    auto* wedge_cmd = app.add_subcommand("wedge", "exterior product of the omega entries");
    wedge_cmd->add_option("file", file)->required();

    auto* omega_cmd = app.add_subcommand("omega", "Omega and its coefficient ideal");
    omega_cmd->add_option("file", file)->required();

    auto* depth_cmd = app.add_subcommand("depth", "depth/grade of an ideal");
    depth_cmd->add_option("file", file);
    depth_cmd->add_option("--ring", ring_flag, "comma-separated variables");
    depth_cmd->add_option("--order", order_flag, "grevlex|lex");
    depth_cmd->add_option("--ideal", ideal_flag, "comma-separated generators");
    depth_cmd->add_option("--quotient", quotient_flag, "ambient quotient generators");

    auto* regseq_cmd = app.add_subcommand("regseq", "check or find regular sequences");
    regseq_cmd->add_option("file", file);
    regseq_cmd->add_flag("--check", check_flag, "check the sequence given by --seq");
    regseq_cmd->add_option("--find", find_len, "search for a sequence of this length");
    regseq_cmd->add_option("--seq", seq_flag, "comma-separated sequence for --check");
    regseq_cmd->add_option("--ring", ring_flag);
    regseq_cmd->add_option("--order", order_flag);
    regseq_cmd->add_option("--ideal", ideal_flag);
    regseq_cmd->add_option("--quotient", quotient_flag);
    regseq_cmd->add_option("--seed", seed_flag)->each([&](const std::string&) { seed_set = true; });

    auto* divide_cmd = app.add_subcommand("divide", "solve eta = sum omega_j ^ gamma_j");
    divide_cmd->add_option("file", file)->required();
    divide_cmd->add_flag("--inductive", inductive, "use the inductive construction");
    divide_cmd->add_flag("--trace", show_trace, "print the derivation trace");

    auto* loc_cmd = app.add_subcommand("localize-divide", "solve a^n eta = sum omega_j ^ gamma_j");
    loc_cmd->add_option("file", file)->required();
    loc_cmd->add_option("--element", element_flag, "the element a");
    loc_cmd->add_option("--cap", cap_flag, "exponent cap");

    auto* exact_cmd = app.add_subcommand("check-exact", "certify exactness at degree p");
    exact_cmd->add_option("file", file)->required();
    exact_cmd->add_option("--p", p_flag, "form degree");

    auto* kernel_cmd = app.add_subcommand("kernel", "generators of Ker B at degree p");
    kernel_cmd->add_option("file", file)->required();
    kernel_cmd->add_option("--p", p_flag, "form degree");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.as_json = as_json;
    try {
        int rc = kExitInput;
        if (wedge_cmd->parsed()) {
            rc = cmd_wedge(load_problem(file), out);
        } else if (omega_cmd->parsed()) {
            rc = cmd_omega(load_problem(file), out);
        } else if (depth_cmd->parsed() || regseq_cmd->parsed()) {
            // context and ideal, from flags or from the problem file's Omega
            RingPtr ring;
            std::optional<Ideal> quotient;
            std::optional<Ideal> ideal;
            std::uint64_t seed = seed_set ? seed_flag : 1;
            if (!file.empty()) {
                ProblemFile pf = load_problem(file);
                ring = pf.ring;
                quotient = pf.quotient;
                if (!pf.omegas.empty()) ideal = omega_of(pf.omegas).coefficients;
                if (!seed_set) seed = pf.seed;
            }
            if (!ring_flag.empty()) ring = ring_from_flags(ring_flag, order_flag);
            if (!ring) throw InvalidInputError("need a problem file or --ring");
            if (!ideal_flag.empty()) ideal = Ideal(ring, parse_poly_list(ideal_flag, ring));
            if (!quotient_flag.empty()) {
                Ideal J(ring, parse_poly_list(quotient_flag, ring));
                if (J.is_unit()) throw InvalidInputError("quotient ideal is the unit ideal");
                quotient = std::move(J);
            }
            QuotientContext ctx = quotient ? QuotientContext{ring, *quotient}
                                           : QuotientContext::polynomial(ring);
            if (depth_cmd->parsed()) {
                if (!ideal) throw InvalidInputError("depth: need --ideal or a file with omegas");
                rc = cmd_depth(*ideal, ctx, out);
            } else if (check_flag) {
                if (seq_flag.empty()) throw InvalidInputError("regseq --check: need --seq");
                rc = cmd_regseq_check(parse_poly_list(seq_flag, ring), ctx, out);
            } else if (find_len > 0) {
                if (!ideal) throw InvalidInputError("regseq --find: need --ideal or omegas");
                rc = cmd_regseq_find(*ideal, ctx, find_len, seed, out);
            } else {
                throw InvalidInputError("regseq: need --check or --find L");
            }
        } else if (divide_cmd->parsed()) {
            rc = cmd_divide(load_problem(file), inductive, show_trace, out);
        } else if (loc_cmd->parsed()) {
            ProblemFile pf = load_problem(file);
            if (!element_flag.empty()) pf.element = parse_polynomial(element_flag, pf.ring);
            if (cap_flag >= 0) pf.cap = cap_flag;
            rc = cmd_localize(pf, out);
        } else if (exact_cmd->parsed()) {
            rc = cmd_check_exact(load_problem(file), p_flag >= 0 ? std::optional<int>(p_flag)
                                                                 : std::nullopt, out);
        } else if (kernel_cmd->parsed()) {
            rc = cmd_kernel(load_problem(file), p_flag >= 0 ? std::optional<int>(p_flag)
                                                            : std::nullopt, out);
        }
        out.flush();
        return rc;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
