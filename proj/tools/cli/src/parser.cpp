#include "dvfactor/cli/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "dvfactor/errors.hpp"

namespace dvfactor::cli {

namespace {

constexpr unsigned long kMaxExponent = 4096;

enum class Tok { number, x, y, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, column = 1, i = 0;
    auto advance = [&](std::size_t bytes) {
        i += bytes;
        ++column;
    };
    while (i < s.size()) {
        const unsigned char ch = static_cast<unsigned char>(s[i]);
        if (ch == '\n') {
            ++i;
            ++line;
            column = 1;
            continue;
        }
        if (std::isspace(ch)) {
            advance(1);
            continue;
        }
        const std::size_t col = column;
        if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::number, std::string(s.substr(i, j - i)), line, col});
            column += j - i;
            i = j;
            continue;
        }
        if (std::isalpha(ch) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            std::string word(s.substr(i, j - i));
            if (word == "x") {
                out.push_back({Tok::x, word, line, col});
            } else if (word == "y") {
                out.push_back({Tok::y, word, line, col});
            } else {
                throw ParseError("unknown variable '" + word + "'", line, col, word);
            }
            column += j - i;
            i = j;
            continue;
        }
        // U+2212 MINUS SIGN, as it appears in typeset formulas.
        if (s.substr(i, 3) == "\xE2\x88\x92") {
            out.push_back({Tok::minus, "-", line, col});
            advance(3);
            continue;
        }
        Tok kind;
        switch (ch) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default: throw ParseError("unexpected character", line, col, std::string(1, static_cast<char>(ch)));
        }
        out.push_back({kind, std::string(1, static_cast<char>(ch)), line, col});
        advance(1);
    }
    out.push_back({Tok::end, "", line, column});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    std::unique_ptr<PolyExpr> parse() {
        auto e = expr();
        if (peek().kind != Tok::end) fail("unexpected token after expression");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        throw ParseError(message, t.line, t.column, t.kind == Tok::end ? "end of input" : t.text);
    }

    static std::unique_ptr<PolyExpr> node(PolyExpr::Kind kind, const Token& at) {
        auto n = std::make_unique<PolyExpr>();
        n->kind = kind;
        n->line = at.line;
        n->column = at.column;
        return n;
    }

    std::unique_ptr<PolyExpr> expr() {
        auto lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = take();
            auto n = node(op.kind == Tok::plus ? PolyExpr::Kind::add : PolyExpr::Kind::sub, op);
            n->lhs = std::move(lhs);
            n->rhs = term();
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<PolyExpr> term() {
        auto lhs = factor();
        while (peek().kind == Tok::star) {
            const Token& op = take();
            auto n = node(PolyExpr::Kind::mul, op);
            n->lhs = std::move(lhs);
            n->rhs = factor();
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<PolyExpr> factor() {
        const Token* minus = nullptr;
        if (peek().kind == Tok::minus) minus = &take();
        auto base = atom();
        if (peek().kind == Tok::caret) {
            const Token& op = take();
            if (peek().kind == Tok::x || peek().kind == Tok::y || peek().kind == Tok::lparen)
                fail("non-constant exponent; exponents must be non-negative integer literals");
            if (peek().kind != Tok::number) fail("expected a non-negative integer exponent");
            const Token& e = take();
            if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponent)
                throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), e.line, e.column, e.text);
            auto n = node(PolyExpr::Kind::pow, op);
            n->exponent = std::stoul(e.text);
            n->lhs = std::move(base);
            base = std::move(n);
        }
        if (minus) {
            auto n = node(PolyExpr::Kind::neg, *minus);
            n->lhs = std::move(base);
            return n;
        }
        return base;
    }

    std::unique_ptr<PolyExpr> atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                take();
                auto n = node(PolyExpr::Kind::literal, t);
                n->value = BigInt(t.text, 10);
                return n;
            }
            case Tok::x: take(); return node(PolyExpr::Kind::var_x, t);
            case Tok::y: take(); return node(PolyExpr::Kind::var_y, t);
            case Tok::lparen: {
                take();
                auto e = expr();
                if (peek().kind != Tok::rparen) fail("expected ')'");
                take();
                return e;
            }
            default: fail("expected a number, x, y or '('");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

BiPoly expand(const PolyExpr& e) {
    using K = PolyExpr::Kind;
    switch (e.kind) {
        case K::literal: return BiPoly::from_x(IntPoly::constant(e.value));
        case K::var_x: return BiPoly::from_x(IntPoly{0, 1});
        case K::var_y: return BiPoly::y_power(1);
        case K::add: return expand(*e.lhs) + expand(*e.rhs);
        case K::sub: return expand(*e.lhs) - expand(*e.rhs);
        case K::mul: return expand(*e.lhs) * expand(*e.rhs);
        case K::neg: return -expand(*e.lhs);
        case K::pow: return bipoly_pow(expand(*e.lhs), e.exponent);
    }
    throw ParseError("corrupt expression tree", e.line, e.column, "");
}

const PolyExpr* find_y(const PolyExpr& e) {
    if (e.kind == PolyExpr::Kind::var_y) return &e;
    if (e.lhs)
        if (const auto* hit = find_y(*e.lhs)) return hit;
    if (e.rhs)
        if (const auto* hit = find_y(*e.rhs)) return hit;
    return nullptr;
}

}  // namespace

std::unique_ptr<PolyExpr> parse_expression(std::string_view text) { return Parser(tokenize(text)).parse(); }

IntPoly to_int_poly(const PolyExpr& expr) {
    if (const auto* y = find_y(expr))
        throw ParseError("unknown variable 'y' in a univariate context", y->line, y->column, "y");
    const BiPoly b = expand(expr);
    return b.coeff(0);
}

BiPoly to_bi_poly(const PolyExpr& expr) {
    BiPoly b = expand(expr);
    if (b.degree_y() < 1) throw ParseError("bivariate input needs y-degree >= 1", expr.line, expr.column, "");
    return b;
}

IntPoly parse_int_poly(std::string_view text) { return to_int_poly(*parse_expression(text)); }

BiPoly parse_bi_poly(std::string_view text) { return to_bi_poly(*parse_expression(text)); }

}  // namespace dvfactor::cli
