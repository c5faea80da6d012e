#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qrr/quadratic_forms.hpp"
#include "qrr/rogers_ramanujan.hpp"

namespace qrr {

/// Immutable expression tree for the q-series expression language.
struct Expr {
    enum class Kind {
        Sum,
        Difference,
        Product,
        Quotient,
        Power,
        Negate,
        Rational,
        Monomial,  // q^value
        Call,
        Infinity,  // the bare "inf" marker (poch's third argument)
    };

    Kind kind;
    Rat value;         // Rational literal or Monomial exponent
    long ipow = 0;     // Power exponent
    std::string name;  // Call name
    std::vector<std::shared_ptr<const Expr>> args;
    std::size_t pos = 0;  // byte offset in the source text
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace dsl_detail {

inline ExprPtr node(Expr::Kind k, std::size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->pos = pos;
    return e;
}

struct Token {
    enum class Kind { Number, Ident, Symbol, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(&src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        const std::string& s = *src_;
        while (i_ < s.size() && std::isspace(static_cast<unsigned char>(s[i_])))
            ++i_;
        tok_.pos = i_ + 1;
        if (i_ >= s.size()) {
            tok_ = {Token::Kind::End, "", i_ + 1};
            return;
        }
        char c = s[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            tok_ = {Token::Kind::Number, s.substr(i_, j - i_), i_ + 1};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            tok_ = {Token::Kind::Ident, s.substr(i_, j - i_), i_ + 1};
            i_ = j;
            return;
        }
        if (std::string("+-*/^(),;").find(c) == std::string::npos)
            throw ParseError(i_ + 1, "unexpected character '" + std::string(1, c) + "'");
        tok_ = {Token::Kind::Symbol, std::string(1, c), i_ + 1};
        ++i_;
    }

    const std::string* src_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::End, "", 0};
};

/// name -> {min arity, max arity} (arity excludes an optional trailing base)
inline const std::map<std::string, std::pair<int, int>>& call_table() {
    static const std::map<std::string, std::pair<int, int>> t = {
        {"phi", {1, 1}},  {"psi", {1, 1}}, {"E", {1, 1}},    {"eta", {0, 0}},
        {"kappa", {1, 1}}, {"f", {2, 2}},  {"G", {1, 1}},    {"H", {1, 1}},
        {"U", {2, 3}},    {"form", {3, 4}}, {"R", {9, 9}},   {"T5", {1, 1}},
        {"U5", {1, 1}},   {"poch", {3, 3}},
    };
    return t;
}

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError(t.pos, "expected end of input, '+', '-', '*', '/' or '^'");
        return e;
    }

private:
    bool at_symbol(const char* s) const {
        return lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == s;
    }

    Token expect_symbol(const char* s) {
        if (!at_symbol(s))
            throw ParseError(lex_.peek().pos,
                             std::string("expected '") + s + "'");
        return lex_.take();
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        while (at_symbol("+") || at_symbol("-")) {
            Token op = lex_.take();
            ExprPtr right = parse_term();
            auto n = node(op.text == "+" ? Expr::Kind::Sum : Expr::Kind::Difference,
                          op.pos);
            const_cast<Expr*>(n.get())->args = {left, right};
            left = n;
        }
        return left;
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        while (at_symbol("*") || at_symbol("/")) {
            Token op = lex_.take();
            ExprPtr right = parse_factor();
            auto n = node(op.text == "*" ? Expr::Kind::Product : Expr::Kind::Quotient,
                          op.pos);
            const_cast<Expr*>(n.get())->args = {left, right};
            left = n;
        }
        return left;
    }

    ExprPtr parse_factor() {
        ExprPtr a = parse_atom();
        // the monomial atom consumes its own exponent
        if (a->kind != Expr::Kind::Monomial && at_symbol("^")) {
            Token op = lex_.take();
            long k = parse_signed_integer();
            auto n = node(Expr::Kind::Power, op.pos);
            const_cast<Expr*>(n.get())->args = {a};
            const_cast<Expr*>(n.get())->ipow = k;
            return n;
        }
        return a;
    }

    ExprPtr parse_atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Symbol && t.text == "-") {
            Token op = lex_.take();
            ExprPtr inner = parse_factor();  // '^' binds tighter than unary '-'
            auto n = node(Expr::Kind::Negate, op.pos);
            const_cast<Expr*>(n.get())->args = {inner};
            return n;
        }
        if (t.kind == Token::Kind::Symbol && t.text == "(") {
            lex_.take();
            ExprPtr e = parse_expr();
            expect_symbol(")");
            return e;
        }
        if (t.kind == Token::Kind::Number) {
            auto n = node(Expr::Kind::Rational, t.pos);
            const_cast<Expr*>(n.get())->value = parse_unsigned_rational();
            return n;
        }
        if (t.kind == Token::Kind::Ident) {
            if (t.text == "q") {
                Token qt = lex_.take();
                auto n = node(Expr::Kind::Monomial, qt.pos);
                Rat e = 1;
                if (at_symbol("^")) {
                    lex_.take();
                    e = parse_signed_rational();
                }
                const_cast<Expr*>(n.get())->value = e;
                return n;
            }
            if (t.text == "inf") {
                Token it = lex_.take();
                return node(Expr::Kind::Infinity, it.pos);
            }
            return parse_call();
        }
        throw ParseError(t.pos, "expected a number, 'q', a function call or '('");
    }

    ExprPtr parse_call() {
        Token name = lex_.take();
        auto spec = call_table().find(name.text);
        if (spec == call_table().end())
            throw ParseError(name.pos, "unknown function '" + name.text + "'");
        expect_symbol("(");
        auto n = node(Expr::Kind::Call, name.pos);
        const_cast<Expr*>(n.get())->name = name.text;
        std::vector<ExprPtr> args;
        if (!at_symbol(")")) {
            args.push_back(parse_expr());
            while (at_symbol(",") || at_symbol(";")) {
                lex_.take();
                args.push_back(parse_expr());
            }
        }
        if (!at_symbol(")"))
            throw ParseError(lex_.peek().pos, "expected ')', ',' or ';'");
        lex_.take();
        auto [lo, hi] = spec->second;
        if (static_cast<int>(args.size()) < lo ||
            static_cast<int>(args.size()) > hi)
            throw ParseError(name.pos, "wrong number of arguments for '" +
                                           name.text + "'");
        const_cast<Expr*>(n.get())->args = std::move(args);
        return n;
    }

    Rat parse_unsigned_rational() {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Number)
            throw ParseError(t.pos, "expected a number");
        Token num = lex_.take();
        Rat v(num.text);
        // a '/' directly followed by a number belongs to the rational literal
        if (at_symbol("/")) {
            Lexer save = lex_;
            lex_.take();
            if (lex_.peek().kind == Token::Kind::Number) {
                Token den = lex_.take();
                Rat d(den.text);
                if (d == 0) throw ParseError(den.pos, "zero denominator");
                v /= d;
            } else {
                lex_ = save;
            }
        }
        v.canonicalize();
        return v;
    }

    Rat parse_signed_rational() {
        bool neg = false;
        if (at_symbol("-")) {
            lex_.take();
            neg = true;
        }
        Rat v = parse_unsigned_rational();
        return neg ? Rat(-v) : v;
    }

    long parse_signed_integer() {
        const Token& t = lex_.peek();
        bool neg = false;
        if (at_symbol("-")) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Token::Kind::Number)
            throw ParseError(lex_.peek().pos, "expected an integer");
        Token num = lex_.take();
        long v = to_long(mpz_class(num.text));
        return neg ? -v : v;
    }

    Lexer lex_;
};

}  // namespace dsl_detail

inline ExprPtr parse(const std::string& text) {
    return dsl_detail::Parser(text).parse();
}

namespace dsl_detail {

inline int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Sum:
        case Expr::Kind::Difference:
            return 1;
        case Expr::Kind::Product:
        case Expr::Kind::Quotient:
            return 2;
        case Expr::Kind::Negate:
            return 3;
        case Expr::Kind::Power:
            return 4;
        default:
            return 5;
    }
}

inline void print_to(const Expr& e, std::string& out, int parent_prec,
                     bool right_side) {
    const int prec = precedence(e.kind);
    const bool parens =
        prec < parent_prec || (prec == parent_prec && right_side && prec <= 2);
    if (parens) out += "(";
    switch (e.kind) {
        case Expr::Kind::Sum:
        case Expr::Kind::Difference:
            print_to(*e.args[0], out, prec, false);
            out += (e.kind == Expr::Kind::Sum) ? " + " : " - ";
            print_to(*e.args[1], out, prec, true);
            break;
        case Expr::Kind::Product:
        case Expr::Kind::Quotient:
            print_to(*e.args[0], out, prec, false);
            out += (e.kind == Expr::Kind::Product) ? "*" : "/";
            print_to(*e.args[1], out, prec, true);
            break;
        case Expr::Kind::Power:
            print_to(*e.args[0], out, prec + 1, false);
            out += "^" + std::to_string(e.ipow);
            break;
        case Expr::Kind::Negate:
            out += "-";
            print_to(*e.args[0], out, prec, true);
            break;
        case Expr::Kind::Rational:
            out += to_string(e.value);
            break;
        case Expr::Kind::Monomial:
            out += "q";
            if (e.value != 1) out += "^" + to_string(e.value);
            break;
        case Expr::Kind::Infinity:
            out += "inf";
            break;
        case Expr::Kind::Call: {
            out += e.name + "(";
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i) out += ",";
                print_to(*e.args[i], out, 0, false);
            }
            out += ")";
            break;
        }
    }
    if (parens) out += ")";
}

}  // namespace dsl_detail

/// Canonical text form; parse(print(parse(s))) is structurally parse(s).
inline std::string print(const Expr& e) {
    std::string out;
    dsl_detail::print_to(e, out, 0, false);
    return out;
}

inline std::string print(const ExprPtr& e) { return print(*e); }

namespace dsl_detail {

inline std::optional<Rat> as_rational(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Rational:
            return e.value;
        case Expr::Kind::Negate: {
            auto v = as_rational(*e.args[0]);
            if (v) return Rat(-*v);
            return std::nullopt;
        }
        case Expr::Kind::Quotient: {
            auto a = as_rational(*e.args[0]), b = as_rational(*e.args[1]);
            if (a && b && *b != 0) return Rat(*a / *b);
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

inline Rat need_rational(const Expr& call, std::size_t i) {
    auto v = as_rational(*call.args[i]);
    if (!v)
        throw ParseError(call.args[i]->pos, call.name + ": argument " +
                                                std::to_string(i + 1) +
                                                " must be a rational constant");
    return *v;
}

inline long need_integer(const Expr& call, std::size_t i) {
    Rat v = need_rational(call, i);
    if (!is_integer(v))
        throw ParseError(call.args[i]->pos, call.name + ": argument " +
                                                std::to_string(i + 1) +
                                                " must be an integer");
    return to_long(mpz_class(v.get_num()));
}

/// A signed monomial argument (+|-) q^k.
inline ThetaArg need_monomial(const Expr& call, std::size_t i) {
    const Expr* e = call.args[i].get();
    int sign = 1;
    while (e->kind == Expr::Kind::Negate) {
        sign = -sign;
        e = e->args[0].get();
    }
    if (e->kind != Expr::Kind::Monomial)
        throw ParseError(call.args[i]->pos, call.name + ": argument " +
                                                std::to_string(i + 1) +
                                                " must be a monomial (+|-)q^k");
    return ThetaArg{sign, e->value};
}

inline ThetaArg need_base(const Expr& call, std::size_t i) {
    ThetaArg b = need_monomial(call, i);
    if (b.exp <= 0)
        throw ParseError(call.args[i]->pos,
                         call.name + ": base exponent must be positive");
    return b;
}

}  // namespace dsl_detail

/// Bottom-up evaluation; the result's precision reflects the series-core
/// propagation rules and may fall below `prec` (T5, inversion, Laurent
/// products), so callers compare against the achieved precision.
inline Series evaluate(const Expr& e, const Rat& prec) {
    using dsl_detail::need_base;
    using dsl_detail::need_integer;
    using dsl_detail::need_monomial;
    using dsl_detail::need_rational;
    switch (e.kind) {
        case Expr::Kind::Sum:
            return add(evaluate(*e.args[0], prec), evaluate(*e.args[1], prec));
        case Expr::Kind::Difference:
            return sub(evaluate(*e.args[0], prec), evaluate(*e.args[1], prec));
        case Expr::Kind::Product:
            return mul(evaluate(*e.args[0], prec), evaluate(*e.args[1], prec));
        case Expr::Kind::Quotient:
            return mul(evaluate(*e.args[0], prec),
                       invert(evaluate(*e.args[1], prec)));
        case Expr::Kind::Power: {
            Series base = evaluate(*e.args[0], prec);
            if (e.ipow >= 0) return pow_int(base, static_cast<unsigned long>(e.ipow));
            return pow_int(invert(base), static_cast<unsigned long>(-e.ipow));
        }
        case Expr::Kind::Negate:
            return negate(evaluate(*e.args[0], prec));
        case Expr::Kind::Rational:
            return shifted(Series::one(prec), e.value, 0);
        case Expr::Kind::Monomial:
            if (prec <= e.value) return Series::zero(prec);
            return Series::monomial(1, e.value, prec);
        case Expr::Kind::Infinity:
            throw ParseError(e.pos, "'inf' is only meaningful inside poch()");
        case Expr::Kind::Call:
            break;
    }

    const std::string& fn = e.name;
    auto unary = [&](Series (*ctor)(const Rat&)) {
        ThetaArg b = need_base(e, 0);
        return at_base(ctor, b.exp, b.sign < 0, prec);
    };
    if (fn == "phi") return unary(+[](const Rat& p) { return phi(p); });
    if (fn == "psi") return unary(+[](const Rat& p) { return psi(p); });
    if (fn == "E") return unary(+[](const Rat& p) { return euler_E(p); });
    if (fn == "kappa") return unary(+[](const Rat& p) { return kappa(p); });
    if (fn == "G") return unary(+[](const Rat& p) { return rr_G(p); });
    if (fn == "H") return unary(+[](const Rat& p) { return rr_H(p); });
    if (fn == "eta") return eta(prec);
    if (fn == "f")
        return theta_f(need_monomial(e, 0), need_monomial(e, 1), prec);
    if (fn == "U") {
        long r = need_integer(e, 0), s = need_integer(e, 1);
        if (e.args.size() == 2) return rr_U(r, s, prec);
        ThetaArg b = need_base(e, 2);
        return rr_U_base(r, s, b.exp, b.sign < 0, prec);
    }
    if (fn == "form") {
        QuadForm F{need_integer(e, 0), need_integer(e, 1), need_integer(e, 2)};
        if (e.args.size() == 3) return theta_of_form(F, prec);
        ThetaArg b = need_base(e, 3);
        Series s = theta_of_form(F, prec / b.exp);
        if (b.sign < 0) s = negate_variable(s);
        return rescale_variable(s, b.exp);
    }
    if (fn == "R") {
        RParams P{need_integer(e, 0), need_integer(e, 1),
                  need_rational(e, 2), need_rational(e, 3),
                  need_integer(e, 4), need_integer(e, 5),
                  need_integer(e, 6), need_integer(e, 7),
                  need_integer(e, 8)};
        return r_function(P, prec);
    }
    if (fn == "T5") return t5(evaluate(*e.args[0], prec));
    if (fn == "U5") return u5(evaluate(*e.args[0], prec));
    if (fn == "poch") {
        ThetaArg a = need_monomial(e, 0);
        Rat step = need_rational(e, 1);
        if (e.args[2]->kind == Expr::Kind::Infinity)
            return pochhammer_infinite(a, step, prec);
        long n = need_integer(e, 2);
        if (n < 0) throw ParseError(e.args[2]->pos, "poch: negative count");
        return pochhammer_finite(a, step, static_cast<unsigned long>(n), prec);
    }
    throw ParseError(e.pos, "unknown function '" + fn + "'");
}

inline Series evaluate(const ExprPtr& e, const Rat& prec) {
    return evaluate(*e, prec);
}

}  // namespace qrr
