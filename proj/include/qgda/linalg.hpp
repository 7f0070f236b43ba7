#pragma once

#include <optional>
#include <vector>

#include "qgda/cyclotomic.hpp"

namespace qgda::linalg {

using Matrix = std::vector<std::vector<CyclotomicNumber>>;

// Exact Gaussian elimination over a cyclotomic field. Solves the square
// system m * w = rhs; nullopt when m is singular.
std::optional<std::vector<CyclotomicNumber>> solve(Matrix m,
                                                   std::vector<CyclotomicNumber> rhs);

// Rank of an arbitrary rectangular matrix.
int rank(Matrix m);

}  // namespace qgda::linalg
