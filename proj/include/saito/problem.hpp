#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "saito/depth.hpp"
#include "saito/parser.hpp"

namespace saito {

/// Line-oriented `key: value` problem description. `#` starts a comment,
/// blank lines are ignored. Keys: ring, order, rank, quotient, omega
/// (repeatable, ordered), eta, p, element, cap, seed.
struct ProblemFile {
    RingPtr ring;
    int rank = 0;
    std::optional<Ideal> quotient;
    std::vector<ExteriorForm> omegas;
    std::optional<ExteriorForm> eta;
    std::optional<int> p;
    std::optional<Polynomial> element;
    int cap = 32;
    std::uint64_t seed = 1;

    QuotientContext context() const {
        return quotient ? QuotientContext{ring, *quotient} : QuotientContext::polynomial(ring);
    }
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty() || !out.empty()) out.push_back(strip(cur));
    return out;
}

}  // namespace detail

inline ProblemFile parse_problem(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw InvalidInputError("problem file line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::string t = detail::strip(line);
        if (t.empty()) continue;
        auto colon = t.find(':');
        if (colon == std::string::npos) fail("expected 'key: value'");
        entries.push_back({detail::strip(t.substr(0, colon)),
                           detail::strip(t.substr(colon + 1))});
    }

    ProblemFile pf;
    MonomialOrder order;
    std::vector<std::string> vars;
    for (const auto& [key, value] : entries) {
        if (key == "ring") {
            for (const auto& v : detail::split_commas(value))
                if (!v.empty()) vars.push_back(v);
        } else if (key == "order") {
            if (value == "grevlex")
                order.kind = OrderKind::Grevlex;
            else if (value == "lex")
                order.kind = OrderKind::Lex;
            else
                throw InvalidInputError("unknown order '" + value + "' (grevlex|lex)");
        } else if (key == "rank") {
            pf.rank = std::stoi(value);
        }
    }
    if (vars.empty()) throw InvalidInputError("problem file: missing 'ring:' line");
    pf.ring = make_ring(vars, order);

    lineno = 0;
    for (const auto& [key, value] : entries) {
        ++lineno;
        if (key == "ring" || key == "order" || key == "rank") continue;
        if (key == "quotient") {
            std::vector<Polynomial> gens;
            for (const auto& s : detail::split_commas(value))
                if (!s.empty()) gens.push_back(parse_polynomial(s, pf.ring));
            Ideal J(pf.ring, std::move(gens));
            if (J.is_unit()) throw InvalidInputError("quotient ideal is the unit ideal");
            pf.quotient = std::move(J);
        } else if (key == "omega") {
            if (pf.rank <= 0) throw InvalidInputError("'omega:' requires a 'rank:' line");
            ExteriorForm w = parse_form(value, pf.ring, pf.rank, 1);
            pf.omegas.push_back(std::move(w));
        } else if (key == "eta") {
            if (pf.rank <= 0) throw InvalidInputError("'eta:' requires a 'rank:' line");
            pf.eta = parse_form(value, pf.ring, pf.rank);
        } else if (key == "p") {
            pf.p = std::stoi(value);
        } else if (key == "element") {
            pf.element = parse_polynomial(value, pf.ring);
        } else if (key == "cap") {
            pf.cap = std::stoi(value);
        } else if (key == "seed") {
            pf.seed = std::stoull(value);
        } else {
            throw InvalidInputError("problem file: unknown key '" + key + "'");
        }
    }
    // a zero eta takes its degree from p when stated
    if (pf.eta && pf.eta->is_zero() && pf.p)
        pf.eta = ExteriorForm::zero(pf.ring, pf.rank, *pf.p);
    return pf;
}

inline ProblemFile parse_problem(const std::string& text) {
    std::istringstream in(text);
    return parse_problem(in);
}

}  // namespace saito
