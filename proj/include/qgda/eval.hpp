#pragma once

#include <optional>
#include <string>
#include <variant>

#include "qgda/calculus.hpp"
#include "qgda/expr.hpp"
#include "qgda/json_io.hpp"

namespace qgda {

enum class OutputFormat { Text, Json };

// Evaluation context: the algebra, the anchor coordinate for derivative and
// polynomial requests (absent when no invertible increment is available),
// and the output format for rendering.
struct Session {
    ExtAlgebra::Ptr algebra;
    std::optional<Coordinate> coordinate;
    OutputFormat format = OutputFormat::Text;
};

// The default anchor: the first non-unit basis vector of the base algebra,
// when its increment is invertible.
std::optional<Coordinate> canonical_coordinate(const ExtAlgebra::Ptr& algebra);

using EvalResult = std::variant<ExtElement, KForm>;

// Evaluates a tree in the session; throws EvalError on unknown symbols,
// wrong arity, out-of-range indices, or any algebraic misuse (wrapped with
// the offending operation's message).
EvalResult evaluate(const Expr& e, const Session& s);

std::string result_to_text(const EvalResult& r);
Json result_to_json(const EvalResult& r);

}  // namespace qgda
