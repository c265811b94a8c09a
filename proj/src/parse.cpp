#include "folpol/parse.hpp"

#include <cctype>

namespace folpol {

namespace {

// Linear combination c0 + c1 dx + c2 dy with polynomial coefficients.
struct Value {
    BivariatePoly c0, cdx, cdy;
    bool has_diff() const { return !cdx.is_zero() || !cdy.is_zero() || diff_seen; }
    bool diff_seen = false;
};

enum class Tok { Num, X, Y, Dx, Dy, Sqrt, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}
    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip();
            Token t{Tok::End, "", line_, col_};
            if (i_ >= s_.size()) {
                out.push_back(t);
                return out;
            }
            char c = s_[i_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i_;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
                t.kind = Tok::Num;
                t.text = s_.substr(i_, j - i_);
                advance(j - i_);
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                size_t j = i_;
                while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
                std::string w = s_.substr(i_, j - i_);
                // split glued identifiers such as "xy" or "xdy"
                if (w == "sqrt") t.kind = Tok::Sqrt, t.text = w, advance(4);
                else if (w.rfind("dx", 0) == 0) t.kind = Tok::Dx, t.text = "dx", advance(2);
                else if (w.rfind("dy", 0) == 0) t.kind = Tok::Dy, t.text = "dy", advance(2);
                else if (w[0] == 'x') t.kind = Tok::X, t.text = "x", advance(1);
                else if (w[0] == 'y') t.kind = Tok::Y, t.text = "y", advance(1);
                else throw SyntaxError("unknown identifier '" + w + "'", line_, col_);
            } else {
                switch (c) {
                    case '+': t.kind = Tok::Plus; break;
                    case '-': t.kind = Tok::Minus; break;
                    case '*': t.kind = Tok::Star; break;
                    case '/': t.kind = Tok::Slash; break;
                    case '^': t.kind = Tok::Caret; break;
                    case '(': t.kind = Tok::LParen; break;
                    case ')': t.kind = Tok::RParen; break;
                    default: throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
                }
                t.text = std::string(1, c);
                advance(1);
            }
            out.push_back(t);
        }
    }

private:
    void advance(size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (s_[i_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++i_;
        }
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance(1);
    }
    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> t) : t_(std::move(t)) {}

    Value parse_all() {
        Value v = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return t_[k_]; }
    Token next() { return t_[k_++]; }
    [[noreturn]] void fail(const std::string& m) const { throw SyntaxError(m, peek().line, peek().col); }

    Value expr() {
        bool neg = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) neg = next().kind == Tok::Minus;
        Value v = term();
        if (neg) v = scale(v, Scalar(-1));
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Value w = term();
            v.c0 += minus ? -w.c0 : w.c0;
            v.cdx += minus ? -w.cdx : w.cdx;
            v.cdy += minus ? -w.cdy : w.cdy;
            v.diff_seen = v.diff_seen || w.diff_seen;
        }
        return v;
    }

    static bool starts_factor(Tok k) {
        return k == Tok::Num || k == Tok::X || k == Tok::Y || k == Tok::Dx || k == Tok::Dy || k == Tok::Sqrt ||
               k == Tok::LParen;
    }

    Value term() {
        Value v = factor();
        for (;;) {
            Tok k = peek().kind;
            if (k == Tok::Star) {
                next();
                v = mul(v, factor());
            } else if (k == Tok::Slash) {
                next();
                Token at = peek();
                Value d = factor();
                if (d.has_diff() || !d.c0.is_constant() || d.c0.is_zero())
                    throw SyntaxError("division only by a nonzero constant", at.line, at.col);
                v = scale(v, d.c0.constant_term().inverse());
            } else if (starts_factor(k)) {
                v = mul(v, factor());
            } else {
                return v;
            }
        }
    }

    Value factor() {
        Value v = atom();
        if (peek().kind == Tok::Caret) {
            next();
            if (peek().kind != Tok::Num) fail("expected an integer exponent");
            Token e = next();
            if (v.has_diff()) throw SyntaxError("power of a differential", e.line, e.col);
            v.c0 = pow(v.c0, static_cast<unsigned>(std::stoul(e.text)));
        }
        return v;
    }

    Value atom() {
        Token t = peek();
        Value v;
        switch (t.kind) {
            case Tok::Num:
                next();
                v.c0 = BivariatePoly(Scalar(Rational(Integer(t.text))));
                return v;
            case Tok::X: next(); v.c0 = BivariatePoly::x(); return v;
            case Tok::Y: next(); v.c0 = BivariatePoly::y(); return v;
            case Tok::Dx: next(); v.cdx = BivariatePoly(1); v.diff_seen = true; return v;
            case Tok::Dy: next(); v.cdy = BivariatePoly(1); v.diff_seen = true; return v;
            case Tok::Sqrt: {
                next();
                if (peek().kind != Tok::LParen) fail("expected '('");
                next();
                bool neg = false;
                if (peek().kind == Tok::Minus) {
                    next();
                    neg = true;
                }
                if (peek().kind != Tok::Num) fail("expected an integer radicand");
                Token n = next();
                if (peek().kind != Tok::RParen) fail("expected ')'");
                next();
                Integer r(n.text);
                if (neg) r = -r;
                Integer k;
                long s;
                squarefree_split(r, k, s);
                Scalar val = (s == 1) ? Scalar(Rational(k)) : Scalar(Rational(0), Rational(k), s);
                v.c0 = BivariatePoly(val);
                return v;
            }
            case Tok::LParen: {
                next();
                v = expr();
                if (peek().kind != Tok::RParen) fail("expected ')'");
                next();
                return v;
            }
            default: fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        }
    }

    static Value scale(Value v, const Scalar& s) {
        v.c0 *= s;
        v.cdx *= s;
        v.cdy *= s;
        return v;
    }

    Value mul(const Value& a, const Value& b) {
        if (a.has_diff() && b.has_diff()) fail("product of differentials");
        Value r;
        const Value& d = a.has_diff() ? a : b;
        const Value& p = a.has_diff() ? b : a;
        r.c0 = a.c0 * b.c0;
        r.cdx = p.c0 * d.cdx;
        r.cdy = p.c0 * d.cdy;
        r.diff_seen = d.diff_seen;
        return r;
    }

    std::vector<Token> t_;
    size_t k_ = 0;
};

Value parse_value(const std::string& text) { return Parser(Lexer(text).run()).parse_all(); }

}  // namespace

OneForm parse_form(const std::string& text) {
    Value v = parse_value(text);
    if (!v.c0.is_zero()) throw SyntaxError("term without dx or dy", 1, 1);
    if (v.cdx.is_zero() && v.cdy.is_zero()) throw SyntaxError("zero form", 1, 1);
    return OneForm(v.cdx, v.cdy);
}

BivariatePoly parse_poly(const std::string& text) {
    Value v = parse_value(text);
    if (v.diff_seen) throw SyntaxError("differential in a polynomial", 1, 1);
    return v.c0;
}

}  // namespace folpol
