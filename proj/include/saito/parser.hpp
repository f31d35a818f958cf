#pragma once

#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "saito/exterior.hpp"
#include "saito/polynomial.hpp"

namespace saito {

namespace detail {

struct Token {
    enum class Kind {
        Number,
        Ident,
        Plus,
        Minus,
        Star,
        Caret,
        Slash,
        LParen,
        RParen,
        LBrace,
        RBrace,
        Comma,
        End,
    };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    /// True when the upcoming character (no whitespace skipped) is c.
    bool peek_raw_char(char c) const { return i_ < src_.size() && src_[i_] == c; }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Token::Kind::End, "", start};
            return;
        }
        char c = src_[i_];
        auto single = [&](Token::Kind k) {
            ++i_;
            tok_ = {k, std::string(1, c), start};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Token::Kind::Number, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) ||
                                       src_[j] == '_'))
                ++j;
            tok_ = {Token::Kind::Ident, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        switch (c) {
            case '+': single(Token::Kind::Plus); return;
            case '-': single(Token::Kind::Minus); return;
            case '*': single(Token::Kind::Star); return;
            case '^': single(Token::Kind::Caret); return;
            case '/': single(Token::Kind::Slash); return;
            case '(': single(Token::Kind::LParen); return;
            case ')': single(Token::Kind::RParen); return;
            case '{': single(Token::Kind::LBrace); return;
            case '}': single(Token::Kind::RBrace); return;
            case ',': single(Token::Kind::Comma); return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::End, "", 0};
};

/// One parsed multiplicative factor of a form term: either a polynomial or
/// a basis token e{...}.
struct FormFactor {
    std::optional<Polynomial> poly;
    std::optional<IndexTuple> tuple;
    std::size_t pos = 0;
};

class PolyParser {
public:
    PolyParser(std::string_view src, RingPtr ring, int form_rank = -1)
        : lex_(src), ring_(std::move(ring)), form_rank_(form_rank) {}

    Polynomial parse_polynomial() {
        Polynomial p = parse_expr();
        expect_end();
        return p;
    }

    /// form := fterm (('+'|'-') fterm)*; each fterm is a product of
    /// polynomial factors and at most one basis token e{i,...} (with e7 as
    /// shorthand for e{7}); a term without a basis token is a scalar.
    ExteriorForm parse_form() {
        std::vector<std::pair<IndexTuple, Polynomial>> terms;  // tuple may be unsorted
        bool negate = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.next();
            negate = true;
        }
        parse_fterm(terms, negate);
        while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
            bool neg = lex_.next().kind == Token::Kind::Minus;
            parse_fterm(terms, neg);
        }
        expect_end();

        int degree = -1;
        for (const auto& [t, c] : terms) {
            int d = static_cast<int>(t.size());
            if (degree == -1) degree = d;
            if (d != degree)
                throw ParseError("form mixes terms of different degrees", 0);
        }
        if (degree == -1) degree = 0;  // the zero form parses as a scalar
        ExteriorForm::TermList list;
        for (auto& [t, c] : terms) list.push_back({std::move(t), std::move(c)});
        return ExteriorForm::from_terms(ring_, form_rank_, degree, list);
    }

private:
    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
            bool neg = lex_.next().kind == Token::Kind::Minus;
            Polynomial t = parse_term();
            acc = neg ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.next();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::Minus:
                lex_.next();
                return -parse_factor();
            case Token::Kind::LParen: {
                lex_.next();
                Polynomial p = parse_expr();
                expect(Token::Kind::RParen, "expected ')'");
                return p;
            }
            case Token::Kind::Number:
                return Polynomial::constant(ring_, parse_rational());
            case Token::Kind::Ident: {
                Token id = lex_.next();
                int vi = ring_->var_index(id.text);
                if (vi < 0) throw ParseError("unknown variable '" + id.text + "'", id.pos);
                int e = 1;
                if (lex_.peek().kind == Token::Kind::Caret) {
                    lex_.next();
                    e = parse_nat("exponent");
                }
                Monomial m = Monomial::one(ring_->nvars());
                m.exp[vi] = e;
                return Polynomial::monomial(ring_, std::move(m), Rational(1));
            }
            default:
                throw ParseError("expected a factor", t.pos);
        }
    }

    Rational parse_rational() {
        Token num = lex_.next();
        Integer n(num.text);
        if (lex_.peek().kind == Token::Kind::Slash) {
            lex_.next();
            Token den = expect(Token::Kind::Number, "expected denominator");
            Integer d(den.text);
            if (d == 0) throw ParseError("zero denominator", den.pos);
            return make_rational(n, d);
        }
        return Rational(n);
    }

    int parse_nat(const char* what) {
        Token t = expect(Token::Kind::Number, std::string("expected ") + what);
        if (t.text.size() > 6) throw ParseError(std::string(what) + " too large", t.pos);
        return std::stoi(t.text);
    }

    // ---- form grammar ----

    void parse_fterm(std::vector<std::pair<IndexTuple, Polynomial>>& out, bool negate) {
        Polynomial coeff = Polynomial::constant(ring_, negate ? -1 : 1);
        std::optional<IndexTuple> tuple;
        bool first = true;
        while (true) {
            FormFactor f = parse_fform_factor();
            if (f.tuple) {
                if (tuple)
                    throw ParseError("more than one basis token in a term", f.pos);
                tuple = std::move(f.tuple);
            } else {
                coeff = coeff * *f.poly;
            }
            first = false;
            if (lex_.peek().kind == Token::Kind::Star) {
                lex_.next();
                continue;
            }
            break;
        }
        (void)first;
        out.push_back({tuple.value_or(IndexTuple{}), std::move(coeff)});
    }

    FormFactor parse_fform_factor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Minus) {
            lex_.next();
            FormFactor f = parse_fform_factor();
            if (f.poly)
                f.poly = -*f.poly;
            else
                throw ParseError("unary minus cannot apply to a basis token", t.pos);
            return f;
        }
        if (t.kind == Token::Kind::Ident) {
            // A declared ring variable always wins over the basis shorthand.
            bool is_var = ring_->var_index(t.text) >= 0;
            if (!is_var && t.text == "e" && lex_.peek_raw_char('{')) {
                Token id = lex_.next();
                return parse_basis_braces(id.pos);
            }
            if (!is_var && t.text.size() > 1 && t.text[0] == 'e' &&
                std::all_of(t.text.begin() + 1, t.text.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                Token id = lex_.next();
                int ix = std::stoi(id.text.substr(1));
                return basis_factor({ix}, id.pos);
            }
        }
        FormFactor f;
        f.pos = t.pos;
        f.poly = parse_factor();
        return f;
    }

    FormFactor parse_basis_braces(std::size_t pos) {
        expect(Token::Kind::LBrace, "expected '{'");
        IndexTuple t;
        if (lex_.peek().kind != Token::Kind::RBrace) {
            t.push_back(parse_nat("basis index"));
            while (lex_.peek().kind == Token::Kind::Comma) {
                lex_.next();
                t.push_back(parse_nat("basis index"));
            }
        }
        expect(Token::Kind::RBrace, "expected '}'");
        return basis_factor(std::move(t), pos);
    }

    FormFactor basis_factor(IndexTuple t, std::size_t pos) {
        if (form_rank_ < 0) throw ParseError("basis token in a polynomial context", pos);
        for (int ix : t)
            if (ix < 1 || ix > form_rank_)
                throw ParseError("basis index out of range 1.." + std::to_string(form_rank_), pos);
        FormFactor f;
        f.tuple = std::move(t);
        f.pos = pos;
        return f;
    }

    Token expect(Token::Kind k, const std::string& msg) {
        if (lex_.peek().kind != k) throw ParseError(msg, lex_.peek().pos);
        return lex_.next();
    }

    void expect_end() {
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
    }

    Lexer lex_;
    RingPtr ring_;
    int form_rank_;
};

}  // namespace detail

/// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := rational | var | var '^' nat | '(' expr ')' | '-' factor;
/// rational := int | int '/' posint. Whitespace is insignificant.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    return detail::PolyParser(text, ring).parse_polynomial();
}

/// Forms extend the polynomial grammar with basis tokens e{i1,...,ip}
/// (e{} is the scalar basis, eN shorthand for e{N}). `expected_degree`
/// disambiguates the degree of "0".
inline ExteriorForm parse_form(std::string_view text, const RingPtr& ring, int m,
                               std::optional<int> expected_degree = std::nullopt) {
    ExteriorForm f = detail::PolyParser(text, ring, m).parse_form();
    if (expected_degree && f.is_zero() && f.degree() != *expected_degree)
        return ExteriorForm::zero(ring, m, *expected_degree);
    if (expected_degree && !f.is_zero() && f.degree() != *expected_degree)
        throw InvalidInputError("form has degree " + std::to_string(f.degree()) + ", expected " +
                                std::to_string(*expected_degree));
    return f;
}

namespace detail {

inline std::string monomial_string(const Monomial& m, const RingSpec& ring) {
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.vars[i];
        if (m.exp[i] != 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
}

/// Renders one term with a positive-looking layout; the caller handles signs.
inline std::string term_string(const Term& t, const RingSpec& ring) {
    Rational c = abs(t.coeff);
    std::string ms = monomial_string(t.mono, ring);
    if (ms.empty()) return to_string(c);
    if (c == 1) return ms;
    return to_string(c) + "*" + ms;
}

}  // namespace detail

/// Canonical printer: terms descending in the ring order, coefficients in
/// lowest terms; parse(format(p)) == p exactly.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const RingSpec& ring = *p.ring();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool neg = sgn(t.coeff) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += detail::term_string(t, ring);
        first = false;
    }
    return out;
}

inline std::string tuple_string(const IndexTuple& t) {
    std::string s = "e{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + "}";
}

/// Canonical printer for forms: terms in colex tuple order; scalar forms
/// print as their coefficient polynomial.
inline std::string to_string(const ExteriorForm& f) {
    if (f.is_zero()) return "0";
    if (f.degree() == 0) return to_string(f.terms().front().second);
    std::string out;
    bool first = true;
    for (const auto& [t, c] : f.terms()) {
        std::string piece;
        bool neg = false;
        if (c.is_one()) {
            piece = tuple_string(t);
        } else if ((-c).is_one()) {
            piece = tuple_string(t);
            neg = true;
        } else if (c.terms().size() == 1) {
            const Term& only = c.terms().front();
            neg = sgn(only.coeff) < 0;
            piece = detail::term_string(only, *f.ring()) + "*" + tuple_string(t);
        } else {
            piece = "(" + to_string(c) + ")*" + tuple_string(t);
        }
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += piece;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << to_string(p);
}

inline std::ostream& operator<<(std::ostream& os, const ExteriorForm& f) {
    return os << to_string(f);
}

}  // namespace saito
