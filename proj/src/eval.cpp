#include "qgda/eval.hpp"

#include "qgda/errors.hpp"

namespace qgda {

namespace {

// Keeps repeated-squaring-free power loops and polynomial requests cheap
// enough for interactive use; anything larger is a typo, not a computation.
constexpr long kMaxExponent = 10000;

BaseElement to_base(const ExtElement& xi, const std::string& what) {
    auto deg = xi.degree();
    if (!deg || *deg != 0)
        throw EvalError(what + " expects a base-algebra element (grade 0)");
    return xi.part(0);
}

long integer_literal(const Expr& e, const std::string& what) {
    if (e.kind != ExprKind::RationalLit || !e.value.is_integer())
        throw EvalError(what + " expects an integer literal");
    const mpz_class num = e.value.numerator();
    if (!num.fits_slong_p())
        throw EvalError(what + ": integer argument out of range");
    return num.get_si();
}

const Coordinate& session_coordinate(const Session& s,
                                     const std::string& what) {
    if (!s.coordinate)
        throw EvalError(what +
                        " needs a coordinate, but the session has none "
                        "(the default increment is not invertible)");
    return *s.coordinate;
}

ExtElement eval_element(const Expr& e, const Session& s);

ExtElement eval_call(const Expr& e, const Session& s) {
    const auto& alg = s.algebra;
    const std::string& f = e.name;
    auto arity = [&](std::size_t want) {
        if (e.children.size() != want)
            throw EvalError(f + " expects " + std::to_string(want) +
                            (want == 1 ? " argument" : " arguments") +
                            ", got " + std::to_string(e.children.size()));
    };
    if (f == "d") {
        arity(1);
        return differential(eval_element(e.children[0], s));
    }
    if (f == "Delta") {
        arity(1);
        BaseElement u = to_base(eval_element(e.children[0], s), f);
        return alg->embed(delta(u));
    }
    if (f == "phi") {
        arity(2);
        BaseElement u = to_base(eval_element(e.children[0], s), f);
        const long k = integer_literal(e.children[1], f);
        if (k < -kMaxExponent || k > kMaxExponent)
            throw EvalError(f + ": twist count out of range");
        return alg->embed(u.twist(static_cast<int>(k)));
    }
    if (f == "der") {
        arity(2);
        BaseElement u = to_base(eval_element(e.children[0], s), f);
        BaseElement x = to_base(eval_element(e.children[1], s), f);
        auto coord = Coordinate::make(alg, std::move(x));
        if (!coord)
            throw EvalError(
                f + ": the increment of the chosen coordinate is not "
                    "invertible");
        return alg->embed(derivative(u, *coord));
    }
    if (f == "P" || f == "Q" || f == "Phi") {
        arity(1);
        const long k = integer_literal(e.children[0], f);
        const Coordinate& c = session_coordinate(s, f);
        if (f == "P") return alg->embed(poly_P(static_cast<int>(k), c));
        if (f == "Q") return alg->embed(poly_Q(static_cast<int>(k), c));
        return alg->embed(poly_Phi(static_cast<int>(k), c));
    }
    throw EvalError("unknown function '" + f + "'");
}

ExtElement eval_element(const Expr& e, const Session& s) {
    const auto& alg = s.algebra;
    switch (e.kind) {
        case ExprKind::RationalLit:
            return alg->unit().scaled(e.value);
        case ExprKind::ScalarQ:
            return alg->unit().scaled(alg->q());
        case ExprKind::Symbol: {
            if (e.name == "t" || e.name == alg->tau_symbol())
                return alg->tau();
            const auto& names = alg->base()->basis_names();
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == e.name)
                    return alg->embed(alg->base()->basis(static_cast<int>(i)));
            throw EvalError("unknown symbol '" + e.name + "'");
        }
        case ExprKind::Sum:
            return eval_element(e.children[0], s) +
                   eval_element(e.children[1], s);
        case ExprKind::Diff:
            return eval_element(e.children[0], s) -
                   eval_element(e.children[1], s);
        case ExprKind::Prod:
            return eval_element(e.children[0], s) *
                   eval_element(e.children[1], s);
        case ExprKind::Pow: {
            if (e.exponent < -kMaxExponent || e.exponent > kMaxExponent)
                throw EvalError("exponent out of range");
            return eval_element(e.children[0], s).pow(e.exponent);
        }
        case ExprKind::Call:
            return eval_call(e, s);
    }
    throw EvalError("malformed expression tree");
}

}  // namespace

std::optional<Coordinate> canonical_coordinate(const ExtAlgebra::Ptr& algebra) {
    if (algebra->base()->dim() < 2) return std::nullopt;
    return Coordinate::make(algebra, algebra->base()->basis(1));
}

EvalResult evaluate(const Expr& e, const Session& s) {
    if (!s.algebra) throw EvalError("session has no algebra");
    try {
        return eval_element(e, s);
    } catch (const EvalError&) {
        throw;
    } catch (const Error& err) {
        // Surface algebraic misuse (non-invertible, non-homogeneous,
        // out-of-range index) as an evaluation error, keeping the message.
        throw EvalError(err.what());
    }
}

std::string result_to_text(const EvalResult& r) {
    if (std::holds_alternative<ExtElement>(r))
        return std::get<ExtElement>(r).to_string();
    return std::get<KForm>(r).to_string();
}

Json result_to_json(const EvalResult& r) {
    if (std::holds_alternative<ExtElement>(r))
        return ext_element_to_json(std::get<ExtElement>(r));
    return form_to_json(std::get<KForm>(r));
}

}  // namespace qgda
