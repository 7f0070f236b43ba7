#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qgda/rational.hpp"

namespace qgda {

enum class ExprKind {
    RationalLit,  // literal p or p/q
    ScalarQ,      // the distinguished root of unity
    Symbol,       // generator or other named element, resolved at evaluation
    Sum,
    Diff,
    Prod,
    Pow,   // integer exponent, possibly negative
    Call,  // named function application
};

// Abstract syntax tree of the expression language. Value type with
// structural equality.
struct Expr {
    ExprKind kind = ExprKind::RationalLit;
    Rational value;              // RationalLit
    std::string name;            // Symbol, Call
    long exponent = 0;           // Pow
    std::vector<Expr> children;  // binary nodes: {lhs, rhs}; Pow: {base};
                                 // Call: arguments

    static Expr rational(Rational v);
    static Expr scalar_q();
    static Expr symbol(std::string name);
    static Expr sum(Expr lhs, Expr rhs);
    static Expr diff(Expr lhs, Expr rhs);
    static Expr prod(Expr lhs, Expr rhs);
    static Expr pow(Expr base, long exponent);
    static Expr call(std::string name, std::vector<Expr> args);
};

bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

struct ParseError {
    std::size_t position;               // byte offset into the source text
    std::vector<std::string> expected;  // descriptions of acceptable tokens
    std::string to_string() const;
};

// Total: every input produces either a tree or a positioned error; no input
// throws or crashes. Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?      (integer may carry a leading '-')
//   atom   := rational | 'q' | symbol | call | '(' expr ')'
//   call   := name '(' (expr (',' expr)*)? ')'
// Whitespace is insignificant; juxtaposition is not multiplication.
std::variant<Expr, ParseError> parse(const std::string& src);

// Minimal-parenthesis rendering; parsing the result reproduces the tree.
std::string pretty_print(const Expr& e);

}  // namespace qgda
