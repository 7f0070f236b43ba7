#pragma once

#include <json.hpp>
#include <string>

#include "qgda/calculus.hpp"

namespace qgda {

using Json = nlohmann::json;

// Standalone scalar: {"n": N, "coords": ["p/q", ...]} with one fraction
// string per power-basis coordinate.
Json scalar_to_json(const CyclotomicNumber& c);
CyclotomicNumber scalar_from_json(const Json& j);

// Base element: {"coords": [["p/q", ...], ...]}, one coordinate array per
// basis vector; the field is implied by the algebra.
Json base_element_to_json(const BaseElement& u);
BaseElement base_element_from_json(const Json& j,
                                   const BaseAlgebra::Ptr& algebra);

// Extension element: {"parts": [base-element, ...]}, grade k at index k.
Json ext_element_to_json(const ExtElement& xi);
ExtElement ext_element_from_json(const Json& j, const ExtAlgebra::Ptr& algebra);

// Form: {"degree": k, "basis": "tau"|"dx", "coeff": base-element}.
Json form_to_json(const KForm& form);
KForm form_from_json(const Json& j, const ExtAlgebra::Ptr& algebra);

// Algebra definition: {"n": N, "sign": 1|-1, "dim": m, "basis": [names],
// "structure": [[[coeff, ...], ...], ...], "unit": [coeff, ...],
// "twist": [[coeff, ...], ...]} where every coeff is a coordinate array of
// fraction strings; structure[i][j] lists the coordinates of e_i * e_j and
// twist[j] the coordinates of the twist image of e_j.
struct AlgebraFile {
    BaseAlgebra::Ptr base;
    int sign;
};

Json algebra_to_json(const BaseAlgebra::Ptr& algebra, int sign);
AlgebraFile algebra_from_json(const Json& j);

// Reads and parses an algebra-definition file; throws Error on unreadable
// files or malformed JSON.
AlgebraFile algebra_from_file(const std::string& path);

}  // namespace qgda
