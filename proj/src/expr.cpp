#include "qgda/expr.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "qgda/errors.hpp"

namespace qgda {

Expr Expr::rational(Rational v) {
    Expr e;
    e.kind = ExprKind::RationalLit;
    e.value = std::move(v);
    return e;
}

Expr Expr::scalar_q() {
    Expr e;
    e.kind = ExprKind::ScalarQ;
    return e;
}

Expr Expr::symbol(std::string name) {
    Expr e;
    e.kind = ExprKind::Symbol;
    e.name = std::move(name);
    return e;
}

namespace {

Expr binary(ExprKind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
}

}  // namespace

Expr Expr::sum(Expr lhs, Expr rhs) {
    return binary(ExprKind::Sum, std::move(lhs), std::move(rhs));
}

Expr Expr::diff(Expr lhs, Expr rhs) {
    return binary(ExprKind::Diff, std::move(lhs), std::move(rhs));
}

Expr Expr::prod(Expr lhs, Expr rhs) {
    return binary(ExprKind::Prod, std::move(lhs), std::move(rhs));
}

Expr Expr::pow(Expr base, long exponent) {
    Expr e;
    e.kind = ExprKind::Pow;
    e.exponent = exponent;
    e.children.push_back(std::move(base));
    return e;
}

Expr Expr::call(std::string name, std::vector<Expr> args) {
    Expr e;
    e.kind = ExprKind::Call;
    e.name = std::move(name);
    e.children = std::move(args);
    return e;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::RationalLit:
            return a.value == b.value;
        case ExprKind::ScalarQ:
            return true;
        case ExprKind::Symbol:
            return a.name == b.name;
        case ExprKind::Pow:
            return a.exponent == b.exponent && a.children == b.children;
        case ExprKind::Call:
            return a.name == b.name && a.children == b.children;
        case ExprKind::Sum:
        case ExprKind::Diff:
        case ExprKind::Prod:
            return a.children == b.children;
    }
    return false;
}

std::string ParseError::to_string() const {
    std::string out = "parse error at position " + std::to_string(position);
    if (!expected.empty()) {
        out += ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
            out += expected[i];
        }
    }
    return out;
}

namespace {

enum class TokKind {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Comma,
    End,
    Bad,  // byte that belongs to no token
};

struct Token {
    TokKind kind;
    std::size_t position;
    std::string text;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    auto is_ident_start = [](unsigned char c) {
        return std::isalpha(c) || c == '_';
    };
    auto is_ident_char = [&](unsigned char c) {
        return std::isalnum(c) || c == '_';
    };
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < n && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            out.push_back({TokKind::Number, start, src.substr(start, i - start)});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < n && is_ident_char(static_cast<unsigned char>(src[i])))
                ++i;
            out.push_back({TokKind::Ident, start, src.substr(start, i - start)});
            continue;
        }
        TokKind kind;
        switch (c) {
            case '+': kind = TokKind::Plus; break;
            case '-': kind = TokKind::Minus; break;
            case '*': kind = TokKind::Star; break;
            case '^': kind = TokKind::Caret; break;
            case '/': kind = TokKind::Slash; break;
            case '(': kind = TokKind::LParen; break;
            case ')': kind = TokKind::RParen; break;
            case ',': kind = TokKind::Comma; break;
            default: kind = TokKind::Bad; break;
        }
        out.push_back({kind, start, src.substr(start, 1)});
        ++i;
    }
    out.push_back({TokKind::End, n, ""});
    return out;
}

// Recursion depth bound keeps pathological inputs (one open parenthesis per
// byte) from exhausting the stack; parse must never crash. Each parenthesis
// level costs four frames (expr -> term -> factor -> atom).
constexpr int kMaxDepth = 1000;

class Parser {
public:
    explicit Parser(const std::string& src) : tokens_(lex(src)) {}

    std::variant<Expr, ParseError> run() {
        auto e = parse_expr(0);
        if (failed_) return error_;
        if (peek().kind != TokKind::End) {
            fail(peek().position, {"'+'", "'-'", "'*'", "'^'", "end of input"});
            return error_;
        }
        return std::move(*e);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool match(TokKind kind) {
        if (peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    void fail(std::size_t position, std::vector<std::string> expected) {
        if (!failed_) {
            failed_ = true;
            error_ = ParseError{position, std::move(expected)};
        }
    }

    std::optional<Expr> parse_expr(int depth) {
        if (depth > kMaxDepth) {
            fail(peek().position, {"an expression nested less deeply"});
            return std::nullopt;
        }
        auto lhs = parse_term(depth + 1);
        if (!lhs) return std::nullopt;
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            const bool is_sum = advance().kind == TokKind::Plus;
            auto rhs = parse_term(depth + 1);
            if (!rhs) return std::nullopt;
            lhs = is_sum ? Expr::sum(std::move(*lhs), std::move(*rhs))
                         : Expr::diff(std::move(*lhs), std::move(*rhs));
        }
        return lhs;
    }

    std::optional<Expr> parse_term(int depth) {
        if (depth > kMaxDepth) {
            fail(peek().position, {"an expression nested less deeply"});
            return std::nullopt;
        }
        auto lhs = parse_factor(depth + 1);
        if (!lhs) return std::nullopt;
        while (match(TokKind::Star)) {
            auto rhs = parse_factor(depth + 1);
            if (!rhs) return std::nullopt;
            lhs = Expr::prod(std::move(*lhs), std::move(*rhs));
        }
        return lhs;
    }

    std::optional<Expr> parse_factor(int depth) {
        if (depth > kMaxDepth) {
            fail(peek().position, {"an expression nested less deeply"});
            return std::nullopt;
        }
        auto base = parse_atom(depth + 1);
        if (!base) return std::nullopt;
        if (!match(TokKind::Caret)) return base;

        bool negative = false;
        if (peek().kind == TokKind::Minus) {
            advance();
            negative = true;
        }
        if (peek().kind != TokKind::Number) {
            fail(peek().position, {"an integer exponent"});
            return std::nullopt;
        }
        const Token& tok = advance();
        long magnitude = 0;
        try {
            magnitude = std::stol(tok.text);
        } catch (const std::exception&) {
            fail(tok.position, {"an exponent within machine range"});
            return std::nullopt;
        }
        return Expr::pow(std::move(*base), negative ? -magnitude : magnitude);
    }

    std::optional<Expr> parse_atom(int depth) {
        if (depth > kMaxDepth) {
            fail(peek().position, {"an expression nested less deeply"});
            return std::nullopt;
        }
        const Token& tok = peek();
        switch (tok.kind) {
            case TokKind::Number: {
                advance();
                std::string text = tok.text;
                if (match(TokKind::Slash)) {
                    if (peek().kind != TokKind::Number) {
                        fail(peek().position, {"a denominator"});
                        return std::nullopt;
                    }
                    const Token& den = advance();
                    if (den.text.find_first_not_of('0') == std::string::npos) {
                        fail(den.position, {"a nonzero denominator"});
                        return std::nullopt;
                    }
                    text += "/" + den.text;
                }
                return Expr::rational(Rational::from_string(text));
            }
            case TokKind::Ident: {
                advance();
                if (peek().kind == TokKind::LParen) {
                    advance();
                    std::vector<Expr> args;
                    if (!match(TokKind::RParen)) {
                        while (true) {
                            auto arg = parse_expr(depth + 1);
                            if (!arg) return std::nullopt;
                            args.push_back(std::move(*arg));
                            if (match(TokKind::Comma)) continue;
                            if (match(TokKind::RParen)) break;
                            fail(peek().position, {"','", "')'"});
                            return std::nullopt;
                        }
                    }
                    return Expr::call(tok.text, std::move(args));
                }
                if (tok.text == "q") return Expr::scalar_q();
                return Expr::symbol(tok.text);
            }
            case TokKind::LParen: {
                advance();
                auto inner = parse_expr(depth + 1);
                if (!inner) return std::nullopt;
                if (!match(TokKind::RParen)) {
                    fail(peek().position, {"')'"});
                    return std::nullopt;
                }
                return inner;
            }
            default:
                fail(tok.position,
                     {"a rational literal", "'q'", "a symbol", "a call",
                      "'('"});
                return std::nullopt;
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool failed_ = false;
    ParseError error_{0, {}};
};

// Precedence levels for minimal-parenthesis printing.
int precedence(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Sum:
        case ExprKind::Diff:
            return 1;
        case ExprKind::Prod:
            return 2;
        case ExprKind::Pow:
            return 3;
        default:
            return 4;
    }
}

void print_into(const Expr& e, int min_prec, std::string& out) {
    const int prec = precedence(e);
    const bool parens = prec < min_prec;
    if (parens) out += "(";
    switch (e.kind) {
        case ExprKind::RationalLit:
            out += e.value.to_string();
            break;
        case ExprKind::ScalarQ:
            out += "q";
            break;
        case ExprKind::Symbol:
            out += e.name;
            break;
        case ExprKind::Sum:
            print_into(e.children[0], 1, out);
            out += " + ";
            print_into(e.children[1], 2, out);
            break;
        case ExprKind::Diff:
            print_into(e.children[0], 1, out);
            out += " - ";
            print_into(e.children[1], 2, out);
            break;
        case ExprKind::Prod:
            print_into(e.children[0], 2, out);
            out += "*";
            print_into(e.children[1], 3, out);
            break;
        case ExprKind::Pow:
            print_into(e.children[0], 4, out);
            out += "^" + std::to_string(e.exponent);
            break;
        case ExprKind::Call: {
            out += e.name;
            out += "(";
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i > 0) out += ", ";
                print_into(e.children[i], 1, out);
            }
            out += ")";
            break;
        }
    }
    if (parens) out += ")";
}

}  // namespace

std::variant<Expr, ParseError> parse(const std::string& src) {
    return Parser(src).run();
}

std::string pretty_print(const Expr& e) {
    std::string out;
    print_into(e, 1, out);
    return out;
}

}  // namespace qgda
